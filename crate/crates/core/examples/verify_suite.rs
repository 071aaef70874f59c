//! The whole check list. `--deep` adds the two large rigidity runs.
use solgroup::checks::run_all;

fn main() {
    let deep = std::env::args().any(|a| a == "--deep");
    let outcomes = run_all(deep);
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    std::process::exit(i32::from(failed > 0));
}
