//! The built-in corpus: one group of scenes per worked example.

use serde::{Deserialize, Serialize};

use super::build::InputError;
use super::run::{run_scene, RunOptions, SceneReport};
use super::scene::Scene;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusGroup {
    pub id: String,
    pub title: String,
    pub scenes: Vec<Scene>,
}

const FILES: &[(&str, &str)] = &[
    ("2.2", include_str!("../../corpus/ex2_2.json")),
    ("2.3", include_str!("../../corpus/ex2_3.json")),
    ("2.4", include_str!("../../corpus/ex2_4.json")),
    ("2.7", include_str!("../../corpus/ex2_7.json")),
    ("5.1", include_str!("../../corpus/ex5_1.json")),
    ("5.2", include_str!("../../corpus/ex5_2.json")),
    ("5.3", include_str!("../../corpus/ex5_3.json")),
    ("5.4", include_str!("../../corpus/ex5_4.json")),
    ("5.5", include_str!("../../corpus/ex5_5.json")),
    ("5.6", include_str!("../../corpus/ex5_6.json")),
    ("5.7", include_str!("../../corpus/ex5_7.json")),
];

/// Every corpus group, in order.
pub fn corpus() -> Vec<CorpusGroup> {
    FILES
        .iter()
        .map(|(id, text)| {
            let g: CorpusGroup = serde_json::from_str(text).unwrap_or_else(|e| panic!("corpus group {id}: {e}"));
            assert_eq!(g.id, *id, "corpus file holds the wrong group");
            g
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupReport {
    pub id: String,
    pub title: String,
    pub scenes: Vec<SceneReport>,
    pub all_match: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub groups: Vec<GroupReport>,
    pub all_match: bool,
}

pub fn run_corpus(only: Option<&str>, opts: RunOptions) -> Result<CorpusReport, InputError> {
    let groups: Vec<CorpusGroup> = corpus().into_iter().filter(|g| only.is_none_or(|id| g.id == id)).collect();
    if let (Some(id), true) = (only, groups.is_empty()) {
        return Err(InputError::new("--only", format!("no corpus group {id:?}")));
    }
    let mut reports = Vec::new();
    for g in groups {
        let scenes = g
            .scenes
            .iter()
            .enumerate()
            .map(|(k, s)| {
                run_scene(s, opts).map_err(|e| InputError::new(format!("corpus {} scene {k}: {}", g.id, e.location), e.message))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let all_match = scenes.iter().all(|s| s.all_match);
        reports.push(GroupReport { id: g.id, title: g.title, scenes, all_match });
    }
    let all_match = reports.iter().all(|g| g.all_match);
    Ok(CorpusReport { groups: reports, all_match })
}
