//! Run the whole scripted verification suite and print every report.

use idealkit::cases::{run_all, CaseConfig, FixtureSet};

fn main() {
    let fx = FixtureSet::builtin().expect("builtin fixtures parse");
    let config = CaseConfig::default();
    for report in run_all(&fx, &config) {
        print!("{}", report.render_text());
    }
}
