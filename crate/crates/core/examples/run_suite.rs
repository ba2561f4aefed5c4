//! Runs one check suite programmatically and prints the table.

use qplane::suites::{render_text, run_suite, SuiteConfig};
use qplane::text::parse_bindings;

fn main() {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "case1-k".into());
    let mut config = SuiteConfig::new(suite);
    config.bindings = parse_bindings("qbar=q").unwrap();
    config.timing = false;
    print!("{}", render_text(&run_suite(&config).unwrap()));
}
