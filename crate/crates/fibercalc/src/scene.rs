//! Scene files: the JSON input format (`fibercalc-scene/1`).
//!
//! A scene declares (all parts optional except the schema tag):
//!
//! ```json
//! {
//!   "schema": "fibercalc-scene/1",
//!   "genus": 2,
//!   "curves": [{"name": "a", "class": [1, 0, 0, 0]}],
//!   "word": [{"curve": "a", "power": 1}],
//!   "state": {"chi": -3, "hopf": -2},
//!   "family": {
//!     "loop1": "c1", "loop2": "c2",
//!     "policy": {"quadratic": [1, 1, -2]},
//!     "twist_type": "paired (1/n, -1/n) surgery"
//!   }
//! }
//! ```
//!
//! `policy` is either the string `"preserve"` or `{"quadratic": [c2, c1, c0]}`.
//! Unknown fields are rejected so golden outputs cannot drift silently.
//! `genus` may be omitted for purely state-level scenes (the disk and the
//! Hopf bands have genus 0, which curve bookkeeping cannot host), but is
//! required as soon as curves, a word, or a family block appear. Curve
//! classes must be primitive or zero (a class of a simple closed curve).

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::family::{FamilyError, FiberedFamily, HopfUpdatePolicy};
use crate::homology::{Curve, CurveSystem, HomologyClass, HomologyError, Letter, MonodromyWord};
use crate::state::{FiberState, StateError, Surface};

/// The accepted schema tag.
pub const SCENE_SCHEMA: &str = "fibercalc-scene/1";

/// Errors from reading and validating scenes. `is_usage` distinguishes
/// missing blocks (a command asked for data the scene does not carry) from
/// domain-invariant violations.
#[derive(Debug, Error)]
pub enum SceneError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported schema {0:?}, expected {SCENE_SCHEMA:?}")]
    Schema(String),
    #[error("scene declares curves, a word, or a family but no genus")]
    MissingGenus,
    #[error("scene has no {0} block")]
    MissingBlock(&'static str),
    #[error("curve {0:?} has a class that is neither primitive nor zero")]
    ImprimitiveCurve(String),
    #[error("family policy must be \"preserve\" or {{\"quadratic\": [c2, c1, c0]}}, got {0:?}")]
    InvalidPolicy(String),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

impl SceneError {
    /// True for parse-level failures (malformed JSON, wrong schema, I/O).
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            SceneError::Io { .. } | SceneError::Parse { .. } | SceneError::Schema(_)
        )
    }

    /// True when a command needs a block the scene simply does not have.
    pub fn is_usage(&self) -> bool {
        matches!(self, SceneError::MissingBlock(_))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SceneFile {
    schema: String,
    #[serde(default)]
    genus: Option<u32>,
    #[serde(default)]
    curves: Vec<CurveSpec>,
    #[serde(default)]
    word: Vec<LetterSpec>,
    #[serde(default)]
    state: Option<StateSpec>,
    #[serde(default)]
    family: Option<FamilySpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveSpec {
    name: String,
    class: Vec<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LetterSpec {
    curve: String,
    power: i64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateSpec {
    chi: i64,
    hopf: i64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilySpec {
    loop1: String,
    loop2: String,
    policy: PolicySpec,
    twist_type: String,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PolicySpec {
    Named(String),
    Quadratic { quadratic: [i64; 3] },
}

/// A validated scene, ready for the invariant, family, word, and
/// certificate commands.
#[derive(Debug)]
pub struct Scene {
    genus: Option<u32>,
    surface: Option<Surface>,
    curves: Option<CurveSystem>,
    word: MonodromyWord,
    state: Option<FiberState>,
    family: Option<FiberedFamily>,
}

impl Scene {
    pub fn from_json_str(input: &str) -> Result<Scene, SceneError> {
        let file: SceneFile = serde_json::from_str(input).map_err(|e| SceneError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Scene::from_file(file)
    }

    pub fn from_path(path: &Path) -> Result<Scene, SceneError> {
        let text = std::fs::read_to_string(path).map_err(|source| SceneError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Scene::from_json_str(&text)
    }

    fn from_file(file: SceneFile) -> Result<Scene, SceneError> {
        if file.schema != SCENE_SCHEMA {
            return Err(SceneError::Schema(file.schema));
        }
        let needs_genus =
            !file.curves.is_empty() || !file.word.is_empty() || file.family.is_some();
        if needs_genus && file.genus.is_none() {
            return Err(SceneError::MissingGenus);
        }

        let state = file
            .state
            .as_ref()
            .map(|s| FiberState::new("scene", s.chi, s.hopf))
            .transpose()?;

        // a declared genus must be geometrically compatible with the state
        let surface = match (file.genus, &state) {
            (Some(genus), Some(state)) => {
                Some(Surface::from_genus_and_euler(genus, state.euler_char())?)
            }
            _ => None,
        };

        let curves = file
            .genus
            .map(|genus| {
                let genus = genus as usize;
                let mut curves = Vec::with_capacity(file.curves.len());
                for spec in &file.curves {
                    let class = HomologyClass::from_i64(genus, &spec.class)?;
                    if !class.is_primitive() && !class.is_zero() {
                        return Err(SceneError::ImprimitiveCurve(spec.name.clone()));
                    }
                    curves.push(Curve::new(spec.name.clone(), class));
                }
                Ok(CurveSystem::new(genus, curves)?)
            })
            .transpose()?;

        let word = MonodromyWord::new(
            file.word
                .iter()
                .map(|l| Letter {
                    curve: l.curve.clone(),
                    power: l.power,
                })
                .collect(),
        );
        if let Some(system) = &curves {
            for letter in word.letters() {
                system.class_of(&letter.curve)?;
            }
        } else {
            debug_assert!(word.is_empty(), "guarded by needs_genus");
        }

        let family = file
            .family
            .map(|spec| {
                let policy = match spec.policy {
                    PolicySpec::Named(ref name) if name == "preserve" => HopfUpdatePolicy::Preserve,
                    PolicySpec::Named(name) => return Err(SceneError::InvalidPolicy(name)),
                    PolicySpec::Quadratic { quadratic: [c2, c1, c0] } => {
                        HopfUpdatePolicy::QuadraticInN { c2, c1, c0 }
                    }
                };
                let base_state = state.clone().ok_or(SceneError::MissingBlock("state"))?;
                let system = curves.clone().expect("guarded by needs_genus");
                Ok(FiberedFamily::new(
                    base_state,
                    word.clone(),
                    system,
                    spec.loop1,
                    spec.loop2,
                    policy,
                    Some(spec.twist_type),
                )?)
            })
            .transpose()?;

        Ok(Scene {
            genus: file.genus,
            surface,
            curves,
            word,
            state,
            family,
        })
    }

    pub fn genus(&self) -> Option<u32> {
        self.genus
    }

    /// The surface determined by genus and state, when both are declared.
    pub fn surface(&self) -> Option<Surface> {
        self.surface
    }

    pub fn curves(&self) -> Option<&CurveSystem> {
        self.curves.as_ref()
    }

    pub fn word(&self) -> &MonodromyWord {
        &self.word
    }

    pub fn state(&self) -> Option<&FiberState> {
        self.state.as_ref()
    }

    pub fn family(&self) -> Option<&FiberedFamily> {
        self.family.as_ref()
    }

    pub fn require_state(&self) -> Result<&FiberState, SceneError> {
        self.state().ok_or(SceneError::MissingBlock("state"))
    }

    pub fn require_curves(&self) -> Result<&CurveSystem, SceneError> {
        self.curves().ok_or(SceneError::MissingBlock("genus/curves"))
    }

    pub fn require_family(&self) -> Result<&FiberedFamily, SceneError> {
        self.family().ok_or(SceneError::MissingBlock("family"))
    }
}
