//! Self-contained certificates that can be re-checked later.
//!
//! A document embeds the domain file text and, for claims about a rule, the
//! SCF file text, so it can be replayed without the original inputs. Inside
//! witnesses, preferences, alternatives and voters are 0-based indices;
//! the file formats stay 1-based.

use serde::{Deserialize, Serialize};

use crate::domains::DomainWitness;
use crate::error::{Error, Result};
use crate::format;
use crate::graph::{self, GraphWitness};
use crate::scf::{self, ScfWitness};
use crate::search::{self, AxiomBundle, Budget};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum Claim {
    /// A domain property fails as the witness shows.
    Domain { witness: DomainWitness },
    /// A property of the induced graph fails as the witness shows.
    Graph { witness: GraphWitness },
    /// The rule in `scf` violates an axiom as the witness shows.
    Scf { scf: String, witness: ScfWitness },
    /// `voter` is a dictator of the rule in `scf`.
    Dictator { scf: String, voter: usize },
    /// The rule in `scf` meets every axiom of the bundle.
    Satisfies { scf: String, bundle: AxiomBundle },
    /// No rule on `n` voters meets the bundle; replayed by searching again.
    Exhausted { n: usize, bundle: AxiomBundle, max_nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    /// Domain file text.
    pub domain: String,
    #[serde(flatten)]
    pub claim: Claim,
}

impl WitnessDocument {
    pub fn new(domain: &crate::Domain, claim: Claim) -> Self {
        Self {
            domain: format::domain_to_text(domain),
            claim,
        }
    }

    /// Re-checks the claim. `Ok(false)` means the claim does not hold;
    /// errors mean the document itself is malformed.
    pub fn verify(&self) -> Result<bool> {
        let d = format::parse_domain(&self.domain)?;
        let table = |text: &str| -> Result<crate::ScfTable> {
            let file = format::parse_scf(text, &d)?;
            if file.domain_ref.starts_with("sha256:") && file.domain_ref != format::domain_digest(&d) {
                return Err(Error::Argument(format!(
                    "rule refers to domain {}, document holds {}",
                    file.domain_ref,
                    format::domain_digest(&d)
                )));
            }
            Ok(file.table)
        };
        Ok(match &self.claim {
            Claim::Domain { witness } => witness.confirms(&d),
            Claim::Graph { witness } => witness.confirms(&graph::induced_graph(&d)),
            Claim::Scf { scf, witness } => witness.confirms(&table(scf)?),
            Claim::Dictator { scf, voter } => scf::is_dictator(&table(scf)?, *voter),
            Claim::Satisfies { scf, bundle } => {
                bundle.validate()?;
                search::verify_table(&table(scf)?, bundle).is_ok()
            }
            Claim::Exhausted { n, bundle, max_nodes } => {
                search::search_scf(&d, *n, bundle, Budget::nodes(*max_nodes))?.is_exhausted()
            }
        })
    }
}

