//! JSON model files.
//!
//! ```json
//! {"kind": "finite_tree", "nodes": ["r", "M"], "parents": {"M": "r"}}
//! {"kind": "ordinal", "rank": 1,
//!  "group": {"base": "cc_isolated", "generators": [{"label": "f", "function": {...}}]},
//!  "sections": {"1": ["f"]}, "samples": ["(TAIL 1)"]}
//! {"kind": "ball", "p": 2, "depth": 2, "group": {"base": "cc_full", "generators": []}}
//! ```

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ideal_core::{Base, IdealFunction, PresentedGroup, Term};
use crate::spectra::{BallSpace, ClopenSet, FiniteTreeSpectrum, OrdinalSpace, PrimeId, Space};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    label: String,
    function: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    base: Base,
    #[serde(default)]
    generators: Vec<RawGenerator>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawModel {
    FiniteTree {
        nodes: Vec<String>,
        parents: BTreeMap<String, String>,
        #[serde(default)]
        description: Option<String>,
    },
    Ordinal {
        rank: u8,
        #[serde(default)]
        points: Option<u64>,
        #[serde(default)]
        group: Option<RawGroup>,
        #[serde(default)]
        sections: BTreeMap<String, Vec<String>>,
        #[serde(default)]
        samples: Vec<String>,
        #[serde(default)]
        description: Option<String>,
    },
    Ball {
        p: u64,
        depth: u32,
        #[serde(default)]
        group: Option<RawGroup>,
        #[serde(default)]
        sections: BTreeMap<String, Vec<String>>,
        #[serde(default)]
        samples: Vec<String>,
        #[serde(default)]
        description: Option<String>,
    },
}

/// A loaded model: either a finite tree or a maximal space with an optional
/// presented group.
#[derive(Clone, Debug)]
pub enum Model {
    Tree { spectrum: Arc<FiniteTreeSpectrum>, description: Option<String> },
    Space { space: Space, group: Option<PresentedGroup>, description: Option<String> },
}

impl Model {
    pub fn load(path: impl AsRef<Path>) -> Result<Model> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Model(format!("cannot read {}: {e}", path.display())))?;
        Model::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Model> {
        let raw: RawModel = serde_json::from_str(text).map_err(|e| Error::Model(e.to_string()))?;
        match raw {
            RawModel::FiniteTree { nodes, parents, description } => {
                let pairs: Vec<(PrimeId, PrimeId)> =
                    parents.into_iter().map(|(c, p)| (PrimeId::new(c), PrimeId::new(p))).collect();
                let nodes: Vec<PrimeId> = nodes.into_iter().map(PrimeId::new).collect();
                let spectrum = Arc::new(FiniteTreeSpectrum::new(&nodes, &pairs)?);
                Ok(Model::Tree { spectrum, description })
            }
            RawModel::Ordinal { rank, points, group, sections, samples, description } => {
                let space = Space::Ordinal(OrdinalSpace::new(rank, points.unwrap_or(0))?);
                build_space(space, group, sections, samples, description)
            }
            RawModel::Ball { p, depth, group, sections, samples, description } => {
                let space = Space::Ball(BallSpace::new(p, depth)?);
                build_space(space, group, sections, samples, description)
            }
        }
    }

    pub fn tree(&self) -> Result<&Arc<FiniteTreeSpectrum>> {
        match self {
            Model::Tree { spectrum, .. } => Ok(spectrum),
            _ => Err(Error::Model("this command needs a finite_tree model".into())),
        }
    }

    pub fn space(&self) -> Result<Space> {
        match self {
            Model::Space { space, .. } => Ok(*space),
            _ => Err(Error::Model("this command needs an ordinal or ball model".into())),
        }
    }

    pub fn group(&self) -> Result<&PresentedGroup> {
        match self {
            Model::Space { group: Some(g), .. } => Ok(g),
            _ => Err(Error::Model("this command needs a model with a group".into())),
        }
    }

    /// A function given as a generator label, a JSON descriptor, or a path to
    /// a file holding one.
    pub fn function(&self, spec: &str) -> Result<IdealFunction> {
        let space = self.space()?;
        if let Ok(g) = self.group() {
            if let Some(f) = g.generator(spec) {
                return Ok(f.clone());
            }
        }
        IdealFunction::from_json(space, &json_arg(spec)?)
    }
}

/// Inline JSON, or the contents of a file.
pub fn json_arg(spec: &str) -> Result<Value> {
    if let Ok(v) = serde_json::from_str(spec) {
        return Ok(v);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Model(format!("cannot read {spec}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Model(format!("{spec}: {e}")))
}

/// A clopen set written as atoms, e.g. `(PT 3) (TAIL 2 5)`.
pub fn parse_clopen(s: &str) -> Result<ClopenSet> {
    match Term::parse(&format!("(CHI {s})"))? {
        Term::Chi(c) => Ok(c),
        _ => unreachable!(),
    }
}

fn build_space(
    space: Space,
    group: Option<RawGroup>,
    sections: BTreeMap<String, Vec<String>>,
    samples: Vec<String>,
    description: Option<String>,
) -> Result<Model> {
    let samples = samples.iter().map(|s| parse_clopen(s)).collect::<Result<Vec<_>>>()?;
    for c in &samples {
        c.to_set(space)?;
    }
    let group = match group {
        None => None,
        Some(raw) => {
            let gens = raw
                .generators
                .into_iter()
                .map(|g| Ok((g.label, IdealFunction::from_json(space, &g.function)?)))
                .collect::<Result<Vec<_>>>()?;
            let mut secs = BTreeMap::new();
            for (k, ts) in sections {
                let layer: usize = k.parse().map_err(|_| Error::Model(format!("section layer `{k}`")))?;
                secs.insert(layer, ts.iter().map(|t| Term::parse(t)).collect::<Result<Vec<_>>>()?);
            }
            let g = PresentedGroup::new(space, raw.base, gens)?.with_sections(secs).with_samples(samples);
            for ts in g.sections().values() {
                for t in ts {
                    g.eval_term(t)?;
                }
            }
            Some(g)
        }
    };
    Ok(Model::Space { space, group, description })
}
