//! Runs every acceptance criterion and prints one line per criterion.

use schubert::selftest;

fn main() {
    let mut failed = Vec::new();
    for id in selftest::ALL {
        let r = selftest::run(id);
        println!("{}", r.timed_line());
        if !r.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", selftest::ALL.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
