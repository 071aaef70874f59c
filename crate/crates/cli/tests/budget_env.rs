mod common;

use common::run_with;
use solgroup_cli::{BUDGET_ENV, EXIT_BUDGET, EXIT_INPUT, EXIT_OK};

// the only test in this binary, so the variable cannot leak into others
#[test]
fn budget_comes_from_the_environment() {
    let petersen = common::cli(&["kneser", "5", "2"]).out;
    std::env::set_var(BUDGET_ENV, "2");
    assert_eq!(run_with(&["aut", "-"], &petersen).code, EXIT_BUDGET);
    assert_eq!(run_with(&["aut", "-", "--budget", "100000"], &petersen).code, EXIT_OK);
    std::env::set_var(BUDGET_ENV, "lots");
    assert_eq!(run_with(&["aut", "-"], &petersen).code, EXIT_INPUT);
    std::env::remove_var(BUDGET_ENV);
    assert_eq!(run_with(&["aut", "-"], &petersen).code, EXIT_OK);
}
