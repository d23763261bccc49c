//! Runs the full acceptance battery and prints one line per criterion.

fn main() {
    for r in artin_tate::verify::run_suite(artin_tate::verify::Suite::All) {
        println!("{}", r.line());
    }
}
