//! Command-line front end.

pub fn run(_argv: Vec<String>) -> i32 {
    0
}
