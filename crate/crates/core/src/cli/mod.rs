//! The `ideal-lab` command line: scene files, the built-in corpus of worked
//! examples and the ideal lattice of a finite ring.

mod build;
mod commands;
mod compact;
mod corpus;
mod run;
pub mod scene;

pub use build::{build, InputError, World};
pub use commands::{cmd_check, cmd_corpus, cmd_lattice, lattice_report, Format, LatticeReport, LatticeRowReport, Output};
pub use compact::parse_ringspec;
pub use corpus::{corpus, run_corpus, CorpusGroup, CorpusReport, GroupReport};
pub use run::{
    format_text, machine_form, run_scene, CheckReport, CheckResult, Rendered, ResultOutcome, RunOptions, SceneReport,
    DEFAULT_N_MAX,
};
pub use scene::Scene;

use serde_json::Value;

/// Parses a scene. Syntax and type errors carry a line and column; extra
/// fields in a check are rejected by name.
pub fn parse_scene(text: &str) -> Result<Scene, InputError> {
    let scene: Scene = serde_json::from_str(text).map_err(|e| InputError::new("", e))?;
    let raw: Value = serde_json::from_str(text).map_err(|e| InputError::new("", e))?;
    let known_defaults = ["strict", "expect"];
    if let Some(checks) = raw.get("checks").and_then(Value::as_array) {
        for (k, (raw, parsed)) in checks.iter().zip(&scene.checks).enumerate() {
            let echoed = serde_json::to_value(parsed).expect("scenes serialize");
            for key in raw.as_object().into_iter().flat_map(|o| o.keys()) {
                if echoed.get(key).is_none() && !known_defaults.contains(&key.as_str()) {
                    return Err(InputError::new(
                        format!("checks[{k}] ({})", parsed.predicate.name()),
                        format!("unknown field {key:?}"),
                    ));
                }
            }
        }
    }
    Ok(scene)
}
