//! The acceptance gate: every criterion runs at its pinned tolerance and
//! prints one pass/fail line. Run with `--nocapture` to see the matrix, or
//! use the `accept` subcommand of the command line for the same output.

use nilop::acceptance;

#[test]
fn acceptance_gate() {
    let mut failures = Vec::new();
    for c in acceptance::all_criteria() {
        let start = std::time::Instant::now();
        let result = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!(
                "PASS {:>2}  {:<46} {:>7.2}s  {}",
                c.id, c.name, secs, detail
            ),
            Err(msg) => {
                println!("FAIL {:>2}  {:<46} {:>7.2}s  {}", c.id, c.name, secs, msg);
                failures.push((c.id, msg));
            }
        }
    }
    for (name, run) in acceptance::supplementary() {
        let start = std::time::Instant::now();
        match run() {
            Ok(detail) => println!(
                "PASS  s  {:<46} {:>7.2}s  {}",
                name,
                start.elapsed().as_secs_f64(),
                detail
            ),
            Err(msg) => {
                println!(
                    "FAIL  s  {:<46} {:>7.2}s  {}",
                    name,
                    start.elapsed().as_secs_f64(),
                    msg
                );
                failures.push((0, msg));
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {:?}", failures);
}
