//! Instance corpora for the law suites.
//!
//! The default corpus spans the strata the suites quantify over:
//! additively idempotent and not, subtractive and not, von Neumann regular
//! and not, arithmetic and not. A seed spec string can reshape the
//! generator families; loading explicit tables from JSON is also
//! supported.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::{
    make_boolean, make_chain_lattice, make_product, make_tropical, make_truncated_nat,
    make_zn_ring, validate_semiring, FiniteSemiring, SemiringTable,
};
use crate::set::Elem;

/// Where an instance came from; some suites need family-specific oracles
/// (divisibility lcm on the min-plus instances).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    TruncatedNat(usize),
    Chain(usize),
    Product(String, String),
    ZnRing(usize),
    Tropical(usize),
    UserTable,
}

pub struct CorpusInstance {
    pub ring: FiniteSemiring,
    pub family: Family,
}

impl CorpusInstance {
    /// Divisibility-lcm oracle, available on min-plus instances where
    /// `y | x` iff `x >= y` and lcm is the numeric maximum.
    pub fn lcm_oracle(&self) -> Option<fn(Elem, Elem) -> Elem> {
        match self.family {
            Family::Tropical(_) => Some(|x, y| x.max(y)),
            _ => None,
        }
    }
}

pub struct Corpus {
    pub instances: Vec<CorpusInstance>,
    pub seed_spec: String,
}

/// Generation parameters; the default covers truncated naturals with caps
/// 1..=6, chains of length 2..=5, pairwise products of {B1, C3, N2},
/// Z/nZ for n in {2, 3, 4, 6}, and min-plus caps 1..=5.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeedSpec {
    pub trunc_caps: Vec<usize>,
    pub chain_sizes: Vec<usize>,
    pub product_atoms: Vec<String>,
    pub zn_moduli: Vec<usize>,
    pub tropical_caps: Vec<usize>,
}

impl Default for SeedSpec {
    fn default() -> Self {
        SeedSpec {
            trunc_caps: (1..=6).collect(),
            chain_sizes: (2..=5).collect(),
            product_atoms: vec!["B1".into(), "C3".into(), "N2".into()],
            zn_moduli: vec![2, 3, 4, 6],
            tropical_caps: (1..=5).collect(),
        }
    }
}

fn parse_range_list(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: usize =
                lo.parse().map_err(|_| Error::Param(format!("bad range start {lo:?}")))?;
            let hi: usize =
                hi.parse().map_err(|_| Error::Param(format!("bad range end {hi:?}")))?;
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| Error::Param(format!("bad number {part:?}")))?);
        }
    }
    Ok(out)
}

impl SeedSpec {
    /// Parses specs like
    /// `trunc=1..6;chain=2..5;prod=B1,C3,N2;zn=2,3,4,6;trop=1..5`.
    /// `default` (or the empty string) is the default spec.
    pub fn parse(spec: &str) -> Result<Self> {
        if spec.is_empty() || spec == "default" {
            return Ok(SeedSpec::default());
        }
        let mut out = SeedSpec::default();
        for clause in spec.split(';').filter(|c| !c.is_empty()) {
            let (key, value) = clause
                .split_once('=')
                .ok_or_else(|| Error::Param(format!("seed clause {clause:?} has no '='")))?;
            match key {
                "trunc" => out.trunc_caps = parse_range_list(value)?,
                "chain" => out.chain_sizes = parse_range_list(value)?,
                "zn" => out.zn_moduli = parse_range_list(value)?,
                "trop" => out.tropical_caps = parse_range_list(value)?,
                "prod" => {
                    out.product_atoms =
                        value.split(',').filter(|a| !a.is_empty()).map(String::from).collect()
                }
                other => return Err(Error::Param(format!("unknown seed key {other:?}"))),
            }
        }
        Ok(out)
    }

    fn atom(&self, name: &str) -> Result<FiniteSemiring> {
        match name {
            "B1" => Ok(make_boolean()),
            _ if name.starts_with('C') => {
                let n = name[1..].parse().map_err(|_| Error::Param(format!("bad atom {name}")))?;
                make_chain_lattice(n)
            }
            _ if name.starts_with('N') => {
                let c = name[1..].parse().map_err(|_| Error::Param(format!("bad atom {name}")))?;
                make_truncated_nat(c)
            }
            _ if name.starts_with('Z') => {
                let n = name[1..].parse().map_err(|_| Error::Param(format!("bad atom {name}")))?;
                make_zn_ring(n)
            }
            _ if name.starts_with('T') => {
                let c = name[1..].parse().map_err(|_| Error::Param(format!("bad atom {name}")))?;
                make_tropical(c)
            }
            _ => Err(Error::Param(format!("unknown product atom {name:?}"))),
        }
    }

    pub fn build(&self, spec_string: &str) -> Result<Corpus> {
        let mut instances = Vec::new();
        for &cap in &self.trunc_caps {
            instances.push(CorpusInstance {
                ring: make_truncated_nat(cap)?,
                family: Family::TruncatedNat(cap),
            });
        }
        for &n in &self.chain_sizes {
            instances
                .push(CorpusInstance { ring: make_chain_lattice(n)?, family: Family::Chain(n) });
        }
        for (i, left) in self.product_atoms.iter().enumerate() {
            for right in &self.product_atoms[i..] {
                let l = self.atom(left)?;
                let r = self.atom(right)?;
                instances.push(CorpusInstance {
                    ring: make_product(&l, &r)?,
                    family: Family::Product(left.clone(), right.clone()),
                });
            }
        }
        for &n in &self.zn_moduli {
            instances.push(CorpusInstance { ring: make_zn_ring(n)?, family: Family::ZnRing(n) });
        }
        for &cap in &self.tropical_caps {
            instances
                .push(CorpusInstance { ring: make_tropical(cap)?, family: Family::Tropical(cap) });
        }

        let mut names = std::collections::BTreeSet::new();
        for inst in &instances {
            if !names.insert(inst.ring.name().to_string()) {
                return Err(Error::Param(format!(
                    "duplicate instance name {}",
                    inst.ring.name()
                )));
            }
            let t = inst.ring.to_table();
            let report = validate_semiring(&t.add, &t.mul, t.zero, t.one)?;
            assert!(report.valid, "corpus instance {} failed validation", inst.ring.name());
        }
        Ok(Corpus { instances, seed_spec: spec_string.to_string() })
    }
}

/// Builds one named generator-family instance: `B1`, `C<n>`, `N<cap>`,
/// `Z<n>`, or `T<cap>`.
pub fn atom_semiring(name: &str) -> Result<FiniteSemiring> {
    SeedSpec::default().atom(name)
}

/// Builds a corpus from a spec string (see [`SeedSpec::parse`]).
pub fn corpus_from_spec(spec: &str) -> Result<Corpus> {
    SeedSpec::parse(spec)?.build(if spec.is_empty() { "default" } else { spec })
}

pub fn default_corpus() -> Corpus {
    corpus_from_spec("default").expect("default corpus must build")
}

/// Loads a corpus from a JSON array of semiring tables.
pub fn corpus_from_tables(tables: &[SemiringTable], label: &str) -> Result<Corpus> {
    let mut instances = Vec::new();
    for t in tables {
        instances.push(CorpusInstance {
            ring: FiniteSemiring::from_table(t)?,
            family: Family::UserTable,
        });
    }
    Ok(Corpus { instances, seed_spec: label.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_shape() {
        let corpus = default_corpus();
        assert_eq!(corpus.instances.len(), 6 + 4 + 6 + 4 + 5);
        assert!(corpus.instances.iter().all(|i| i.ring.size() <= 9));
        // Strata coverage: idempotent and not, vNR and not, rings present.
        assert!(corpus.instances.iter().any(|i| i.ring.is_additively_idempotent()));
        assert!(corpus.instances.iter().any(|i| !i.ring.is_additively_idempotent()));
        assert!(corpus.instances.iter().any(|i| i.ring.is_von_neumann_regular()));
        assert!(corpus.instances.iter().any(|i| !i.ring.is_von_neumann_regular()));
    }

    #[test]
    fn seed_spec_parsing() {
        let s = SeedSpec::parse("trunc=1..2;chain=3;prod=B1;zn=2;trop=1").unwrap();
        assert_eq!(s.trunc_caps, vec![1, 2]);
        assert_eq!(s.chain_sizes, vec![3]);
        let corpus = s.build("custom").unwrap();
        assert_eq!(corpus.instances.len(), 2 + 1 + 1 + 1 + 1);
        assert!(SeedSpec::parse("bogus=1").is_err());
    }
}
