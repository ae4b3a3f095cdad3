//! Named property suites run over every partition up to a size bound.

use std::fmt;
use std::str::FromStr;

use burge_core::burge::{apply_del, chain, characterize_superdistinct, descent_map, encode, in_class_b};
use burge_core::fiber::{delta, fiber};
use burge_core::hooks::{diagonal_hooks, durfee, foata_fiber, path_to_partition};
use burge_core::matrix::{exhaustive_max_type, verify_restriction, PrimeField, DEFAULT_SCAN_BUDGET};
use burge_core::oblak::{oblak, oblak_all_chains, DEFAULT_CHAIN_LIMIT};
use burge_core::partition::partitions_of;
use burge_core::{Error, Partition};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    LemStats,
    PropStats,
    PropCharacterization,
    ThmMainVsOblak,
    CorBox,
    ThmOblakburge,
    PropKhatami,
    FoataHooks,
    MatrixRestriction,
    MatrixDominance,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::LemStats,
        Suite::PropStats,
        Suite::PropCharacterization,
        Suite::ThmMainVsOblak,
        Suite::CorBox,
        Suite::ThmOblakburge,
        Suite::PropKhatami,
        Suite::FoataHooks,
        Suite::MatrixRestriction,
        Suite::MatrixDominance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LemStats => "lem-stats",
            Suite::PropStats => "prop-stats",
            Suite::PropCharacterization => "prop-characterization",
            Suite::ThmMainVsOblak => "thm-main-vs-oblak",
            Suite::CorBox => "cor-box",
            Suite::ThmOblakburge => "thm-oblakburge",
            Suite::PropKhatami => "prop-khatami",
            Suite::FoataHooks => "foata-hooks",
            Suite::MatrixRestriction => "matrix-restriction",
            Suite::MatrixDominance => "matrix-dominance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|c| c.name()).collect();
            format!("unknown suite {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_n: usize,
    pub checks: Vec<Suite>,
    pub field: PrimeField,
    pub trials: usize,
    pub threads: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: Suite,
    pub checked: usize,
    pub failures: usize,
    /// Instances left out because they exceed an enumeration budget.
    pub skipped: usize,
    pub counterexample: Option<String>,
    pub reproducer: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            write!(
                f,
                "{:<22} checked {:>7}  failures {:>4}",
                s.name.name(),
                s.checked,
                s.failures
            )?;
            if s.skipped > 0 {
                write!(f, "  skipped {}", s.skipped)?;
            }
            writeln!(f)?;
            if let Some(c) = &s.counterexample {
                writeln!(f, "    first counterexample: {c}")?;
            }
            if let Some(r) = &s.reproducer {
                writeln!(f, "    reproduce: {r}")?;
            }
        }
        write!(f, "{}", if self.passed { "all suites passed" } else { "FAILURES" })
    }
}

enum Outcome {
    Pass,
    Skip,
    Fail(String),
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(msg())
    }
}

fn all_partitions(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(partitions_of).collect()
}

fn super_distinct(max_n: usize) -> Vec<Partition> {
    (1..=max_n)
        .flat_map(partitions_of)
        .filter(Partition::is_super_distinct)
        .collect()
}

fn run_suite(suite: Suite, cfg: &SweepConfig) -> SuiteResult {
    let instances = match suite {
        Suite::CorBox => (1..=cfg.max_n).map(|n| Partition::new(vec![n]).unwrap()).collect(),
        Suite::FoataHooks => super_distinct(cfg.max_n),
        _ => all_partitions(cfg.max_n),
    };
    let outcomes: Vec<(Partition, Outcome)> = instances
        .into_par_iter()
        .map(|p| {
            let o = run_one(suite, &p, cfg);
            (p, o)
        })
        .collect();

    let mut result = SuiteResult {
        name: suite,
        checked: 0,
        failures: 0,
        skipped: 0,
        counterexample: None,
        reproducer: None,
    };
    for (p, o) in outcomes {
        match o {
            Outcome::Pass => result.checked += 1,
            Outcome::Skip => result.skipped += 1,
            Outcome::Fail(msg) => {
                result.checked += 1;
                result.failures += 1;
                if result.counterexample.is_none() {
                    result.counterexample = Some(msg);
                    result.reproducer = Some(reproducer(suite, &p, cfg));
                }
            }
        }
    }
    result
}

/// The command that shows the data behind a failure on `p`.
pub fn reproducer(suite: Suite, p: &Partition, cfg: &SweepConfig) -> String {
    let arg = p.to_comma_string();
    match suite {
        Suite::LemStats | Suite::PropStats | Suite::PropCharacterization => format!("burge chain {arg}"),
        Suite::ThmMainVsOblak => format!("burge oblak {arg}"),
        Suite::CorBox => {
            let n = p.size();
            format!("burge sweep --max-n {n} --checks cor-box")
        }
        Suite::ThmOblakburge | Suite::PropKhatami => format!("burge oblak-chains {arg}"),
        Suite::FoataHooks => format!("burge fiber {arg}"),
        Suite::MatrixRestriction => format!(
            "burge --seed {} verify --partition {arg} --field {} --trials {}",
            cfg.seed,
            cfg.field.modulus(),
            cfg.trials
        ),
        Suite::MatrixDominance => format!("burge scan-max --partition {arg} --field {}", cfg.field.modulus()),
    }
}

fn run_one(suite: Suite, p: &Partition, cfg: &SweepConfig) -> Outcome {
    match suite {
        Suite::LemStats => {
            let f = p.to_frequency();
            let d = apply_del(&f);
            let in_b = in_class_b(&f);
            let ok = d.length() + usize::from(in_b) == f.length()
                && d.size() + f.two_measure() == f.size()
                && d.two_measure() + usize::from(in_b && !in_class_b(&d)) == f.two_measure();
            check(ok, || format!("{p}: ∂f = {d}"))
        }
        Suite::PropStats => {
            let f = p.to_frequency();
            let w = encode(&f);
            let ok = f.length() == w.as_word().count(burge_core::Letter::B)
                && f.size() == w.maj()
                && f.two_measure() == w.des();
            check(ok, || format!("{p}: Ω = {w}"))
        }
        Suite::PropCharacterization => {
            let r = characterize_superdistinct(p);
            check(r.consistent(), || format!("{p}: {:?}", r.as_array()))
        }
        Suite::ThmMainVsOblak => {
            let des = descent_map(p);
            let obk = oblak(&p.to_frequency());
            check(des == obk, || format!("{p}: Des {des} vs Obk {obk}"))
        }
        Suite::CorBox => cor_box(p.size()),
        Suite::PropKhatami => match oblak_all_chains(&p.to_frequency(), DEFAULT_CHAIN_LIMIT) {
            Err(Error::BudgetExceeded { .. }) => Outcome::Skip,
            Err(e) => Outcome::Fail(format!("{p}: {e}")),
            Ok(chains) => {
                let v = chains[0].valuation();
                check(chains.iter().all(|c| c.valuation() == v), || {
                    format!("{p}: valuations differ")
                })
            }
        },
        Suite::ThmOblakburge => match oblak_all_chains(&p.to_frequency(), DEFAULT_CHAIN_LIMIT) {
            Err(Error::BudgetExceeded { .. }) => Outcome::Skip,
            Err(e) => Outcome::Fail(format!("{p}: {e}")),
            Ok(chains) => {
                let df = apply_del(&p.to_frequency());
                for c in chains {
                    match c.del() {
                        Err(e) => return Outcome::Fail(format!("{p}: chain {:?}: {e}", c.indices)),
                        Ok(d) => {
                            if d.start() != &df || d.valuation() != c.valuation().reduce() {
                                return Outcome::Fail(format!("{p}: chain {:?}", c.indices));
                            }
                        }
                    }
                }
                Outcome::Pass
            }
        },
        Suite::FoataHooks => foata_hooks(p),
        Suite::MatrixRestriction => match verify_restriction(p, cfg.field, cfg.trials, cfg.seed, 0) {
            Ok(r) => check(r.passed, || {
                format!(
                    "{p}: expected {} witness {} misses {}",
                    r.expected, r.observed, r.misses
                )
            }),
            Err(e) => Outcome::Fail(format!("{p}: {e}")),
        },
        Suite::MatrixDominance => match exhaustive_max_type(p, cfg.field, DEFAULT_SCAN_BUDGET) {
            Err(Error::BudgetExceeded { .. }) => Outcome::Skip,
            Err(e) => Outcome::Fail(format!("{p}: {e}")),
            Ok(r) => check(r.passed && r.nilpotent == r.candidates, || {
                let max = r.maximum.map_or("none".into(), |m| m.to_string());
                format!("{p}: maximum {max}, Des {}", r.expected)
            }),
        },
    }
}

/// Groups all partitions of `n` by descent map and compares every group
/// with the box enumeration.
fn cor_box(n: usize) -> Outcome {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for p in partitions_of(n) {
        groups.entry(descent_map(&p)).or_default().push(p);
    }
    let qs: Vec<Partition> = partitions_of(n).filter(Partition::is_super_distinct).collect();
    if qs.len() != groups.len() {
        return Outcome::Fail(format!(
            "n={n}: {} fibers but {} super-distinct partitions",
            groups.len(),
            qs.len()
        ));
    }
    for q in qs {
        let Some(mut members) = groups.remove(&q) else {
            return Outcome::Fail(format!("{q}: no partition maps to it"));
        };
        let entries = match fiber(&q) {
            Ok(e) => e,
            Err(e) => return Outcome::Fail(format!("{q}: {e}")),
        };
        let volume = delta(&q).map(|d| d.volume()).unwrap_or(0);
        if entries.len() != volume || entries.iter().any(|e| e.parts != e.coords.total()) {
            return Outcome::Fail(format!("{q}: box size or part counts"));
        }
        let mut boxed: Vec<Partition> = entries.into_iter().map(|e| e.partition).collect();
        boxed.sort();
        members.sort();
        if boxed != members {
            return Outcome::Fail(format!("{q}: box differs from the fiber"));
        }
    }
    Outcome::Pass
}

fn foata_hooks(q: &Partition) -> Outcome {
    let entries = match fiber(q) {
        Ok(e) => e,
        Err(e) => return Outcome::Fail(format!("{q}: {e}")),
    };
    let mut images = Vec::with_capacity(entries.len());
    for e in &entries {
        let w = match foata_fiber(q, &e.coords) {
            Ok(w) => w,
            Err(err) => return Outcome::Fail(format!("{q} {}: {err}", e.coords)),
        };
        let img = path_to_partition(&w);
        let ok = w.inv() == e.code.maj()
            && img.size() == q.size()
            && img.length() == e.coords.total()
            && diagonal_hooks(&img) == *q
            && durfee(&img) == q.length();
        if !ok {
            return Outcome::Fail(format!("{q} {}: image {img}", e.coords));
        }
        images.push(img);
    }
    images.sort();
    images.dedup();
    let mut with_hooks: Vec<Partition> = partitions_of(q.size()).filter(|p| diagonal_hooks(p) == *q).collect();
    with_hooks.sort();
    check(images == with_hooks, || {
        format!("{q}: image is not the set of partitions with these hooks")
    })
}

pub fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build();
    let run = || cfg.checks.iter().map(|&s| run_suite(s, cfg)).collect::<Vec<_>>();
    let suites = match pool {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let passed = suites.iter().all(|s| s.failures == 0);
    SweepReport {
        config: cfg.clone(),
        suites,
        passed,
    }
}

/// Chain states for the `chain` verb, shared with the table printer.
pub fn chain_rows(p: &Partition) -> (burge_core::BurgeWord, Vec<crate::records::ChainRow>) {
    let c = chain(&p.to_frequency());
    let letters: Vec<char> = c.word.to_string().chars().collect();
    let rows = c
        .states
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let part = f.to_partition();
            crate::records::ChainRow {
                step: i,
                frequency: f.clone(),
                descent_map: descent_map(&part),
                partition: part,
                letter: letters[i].to_string(),
            }
        })
        .collect();
    (c.word, rows)
}
