//! Serializable reports for single computations.

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::Result;
use crate::linalg::{require_semisimple, Field};
use crate::specht::specht_module;
use crate::stability::{central_stabilization_sequence, Seed};
use crate::symrep::{decompose, SymRepDocument};
use crate::verify::SCHEMA;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpechtReport {
    pub schema: String,
    pub partition: Partition,
    #[serde(flatten)]
    pub rep: SymRepDocument,
}

pub fn specht_report<K: Field>(mu: &Partition, field: &K) -> SpechtReport {
    let rep = specht_module(mu, field).rep.to_document();
    SpechtReport { schema: SCHEMA.into(), partition: mu.clone(), rep }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub partition: Partition,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizeTerm {
    pub n: usize,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constituents: Option<Vec<Constituent>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizeReport {
    pub schema: String,
    pub seed: String,
    pub field: String,
    pub steps: usize,
    pub terms: Vec<StabilizeTerm>,
}

impl StabilizeReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("central stabilization of {} over {}, {} steps\n", self.seed, self.field, self.steps);
        for t in &self.terms {
            out.push_str(&format!("  V_{:<3} dim {:>6}", t.n, t.dim));
            if let Some(cs) = &t.constituents {
                let parts: Vec<String> = cs
                    .iter()
                    .map(|c| {
                        if c.multiplicity == 1 {
                            format!("({})", c.partition)
                        } else {
                            format!("{}({})", c.multiplicity, c.partition)
                        }
                    })
                    .collect();
                out.push_str("  = ");
                out.push_str(if parts.is_empty() { "0" } else { "" });
                out.push_str(&parts.join(" + "));
            }
            out.push('\n');
        }
        out
    }
}

/// Stabilizes `seed` (target degree `degree` for the families defined in every
/// degree) for `steps` maps. With `with_constituents`, every term is
/// decomposed, which needs semisimplicity up to the last degree.
pub fn stabilize_report<K: Field>(
    seed: &Seed,
    degree: usize,
    steps: usize,
    with_constituents: bool,
    field: &K,
) -> Result<StabilizeReport> {
    let n = seed.degree(degree);
    if with_constituents {
        require_semisimple(field, (n + steps).saturating_sub(1))?;
    }
    let phi = seed.map(field, degree)?;
    let seq = central_stabilization_sequence(&phi, steps, None)?;
    let terms = seq
        .reps
        .iter()
        .enumerate()
        .map(|(i, rep)| {
            let constituents = if with_constituents {
                let dec = decompose(rep)?;
                Some(
                    dec.multiplicities
                        .iter()
                        .map(|(p, m)| Constituent { partition: p.clone(), multiplicity: *m })
                        .collect(),
                )
            } else {
                None
            };
            Ok(StabilizeTerm { n: seq.start + i, dim: rep.dim(), constituents })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilizeReport { schema: SCHEMA.into(), seed: seed.to_string(), field: field.spec().to_string(), steps, terms })
}
