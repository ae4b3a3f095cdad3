//! The `burge` command line: one verb per operation of `burge-core`, plus
//! `sweep` for batch property checks.

pub mod records;
pub mod sweep;

use std::io::Write;

use burge_core::burge::{decode_word, descent_map, encode};
use burge_core::fiber::{coordinates_of, delta, fiber, fiber_code, max_parts_partition, symmetry_map, BoxCoordinates};
use burge_core::hooks::{diagonal_hooks, durfee, foata_fiber, path_to_partition};
use burge_core::matrix::{
    exhaustive_max_type, verify_restriction, PrimeField, DEFAULT_SAMPLING_PRIME, DEFAULT_SCAN_BUDGET,
};
use burge_core::oblak::{
    annihilate, check_commuting_square, evaluate, is_left_admissible, is_right_admissible, maximal_indices,
    oblak_all_chains, OblakChain, DEFAULT_CHAIN_LIMIT,
};
use burge_core::partition::parse_partition;
use burge_core::{burge::apply_del, Partition, Word};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use records::*;
use sweep::{run_sweep, Suite, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "burge",
    version,
    about = "Burge codes, the descent map, Oblak chains and commuting nilpotent matrices"
)]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

fn word_arg(s: &str) -> Result<Word, String> {
    s.parse::<Word>().map_err(|e| e.to_string())
}

/// Comma-separated non-negative integers, optionally parenthesised.
#[derive(Clone, Debug, Default)]
pub struct UsizeList(pub Vec<usize>);

fn usize_list(s: &str) -> Result<UsizeList, String> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(UsizeList::default());
    }
    t.split(',')
        .enumerate()
        .map(|(i, x)| x.trim().parse::<usize>().map_err(|e| format!("entry {}: {e}", i + 1)))
        .collect::<Result<Vec<_>, _>>()
        .map(UsizeList)
}

fn field_arg(s: &str) -> Result<PrimeField, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    PrimeField::new(p).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Prime modulus of the field.
    #[arg(long, env = "BURGE_FIELD", value_parser = field_arg, default_value_t = default_field())]
    pub field: PrimeField,
}

fn default_field() -> PrimeField {
    PrimeField::new(DEFAULT_SAMPLING_PRIME).expect("prime")
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Burge code of a partition.
    Encode {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
    },
    /// Partition with the given Burge code.
    Decode {
        #[arg(value_parser = word_arg)]
        word: Word,
    },
    /// Descent map, printed in comma form.
    Dmap {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
    },
    /// The Burge chain f, ∂f, ..., ε with its letters.
    Chain {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
    },
    /// Oblak process with the smallest maximal index at each step.
    Oblak {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
    },
    /// Every Oblak chain up to index equivalence, with its ∂-image.
    OblakChains {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
        #[arg(long, default_value_t = DEFAULT_CHAIN_LIMIT)]
        limit: usize,
    },
    /// Whether ∂ commutes with evaluation and annihilation at an index.
    CheckSquare {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
        #[arg(long)]
        index: usize,
    },
    /// All partitions with the given super-distinct descent map.
    Fiber {
        #[arg(value_parser = partition_arg)]
        q: Partition,
    },
    /// Box coordinates of a partition inside its fiber.
    Coords {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
    },
    /// The fiber element with the most parts.
    Maxparts {
        #[arg(value_parser = partition_arg)]
        q: Partition,
    },
    /// Reflect box coordinates at the given 1-based positions.
    Symmetry {
        #[arg(value_parser = partition_arg)]
        q: Partition,
        #[arg(long, value_parser = usize_list)]
        coords: UsizeList,
        #[arg(long, value_parser = usize_list, default_value = "")]
        positions: UsizeList,
    },
    /// Foata image of a fiber code and the partition its path traces.
    Foata {
        #[arg(value_parser = partition_arg)]
        q: Partition,
        #[arg(long, value_parser = usize_list)]
        coords: UsizeList,
    },
    /// Diagonal hook lengths.
    Hooks {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
    },
    /// Side of the Durfee square.
    Durfee {
        #[arg(value_parser = partition_arg)]
        partition: Partition,
    },
    /// Check that B restricted to im A has type ∂P, for the witness and random A.
    Verify {
        #[arg(long, value_parser = partition_arg)]
        partition: Partition,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Random trials allowed to miss ∂P.
        #[arg(long, default_value_t = 0)]
        tolerance: usize,
        #[arg(long)]
        witness_only: bool,
    },
    /// Exhaustive scan of the nilpotent commutator over a small field.
    ScanMax {
        #[arg(long, value_parser = partition_arg)]
        partition: Partition,
        #[arg(long, value_parser = field_arg, default_value = "2")]
        field: PrimeField,
        #[arg(long, default_value_t = DEFAULT_SCAN_BUDGET)]
        budget: u128,
    },
    /// Run named property suites over all partitions up to a size.
    Sweep {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<Suite>,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

impl clap::builder::ValueParserFactory for Suite {
    type Parser = clap::builder::ValueParser;

    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<Suite>())
    }
}

/// Runs one command, writing to `out` and `err`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit<T: Serialize + std::fmt::Display>(json: bool, out: &mut dyn Write, rec: &T) -> Result<(), String> {
    let res = if json {
        serde_json::to_string_pretty(rec)
            .map_err(|e| e.to_string())
            .and_then(|s| writeln!(out, "{s}").map_err(|e| e.to_string()))
    } else {
        writeln!(out, "{rec}").map_err(|e| e.to_string())
    };
    match res {
        // A closed pipe (e.g. `| head`) is not an error of ours.
        Err(msg) if msg.contains("Broken pipe") => Ok(()),
        other => other,
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    let json = cli.json;
    let e = |x: burge_core::Error| x.to_string();
    match &cli.command {
        Command::Encode { partition } => {
            let frequency = partition.to_frequency();
            let code = encode(&frequency);
            emit(
                json,
                out,
                &EncodeRecord {
                    partition: partition.clone(),
                    frequency,
                    code,
                },
            )?;
        }
        Command::Decode { word } => {
            let frequency = decode_word(word).map_err(e)?;
            let code = burge_core::BurgeWord::new(word.clone()).map_err(e)?;
            emit(
                json,
                out,
                &DecodeRecord {
                    code,
                    partition: frequency.to_partition(),
                    frequency,
                },
            )?;
        }
        Command::Dmap { partition } => {
            emit(
                json,
                out,
                &DmapRecord {
                    partition: partition.clone(),
                    descent_map: descent_map(partition),
                },
            )?;
        }
        Command::Chain { partition } => {
            let (code, rows) = sweep::chain_rows(partition);
            emit(
                json,
                out,
                &ChainRecord {
                    partition: partition.clone(),
                    code,
                    rows,
                },
            )?;
        }
        Command::Oblak { partition } => {
            let f = partition.to_frequency();
            let mut indices = Vec::new();
            let mut cur = f.clone();
            while !cur.is_empty() {
                let i = maximal_indices(&cur)[0];
                indices.push(i);
                cur = annihilate(&cur, i);
            }
            let c = OblakChain::from_indices(&f, &indices).map_err(e)?;
            let valuation = c.valuation();
            let des = descent_map(partition);
            emit(
                json,
                out,
                &OblakRecord {
                    frequency: f,
                    indices,
                    values: c.valuation_sequence(),
                    agrees: valuation == des,
                    valuation,
                    descent_map: des,
                },
            )?;
        }
        Command::OblakChains { partition, limit } => {
            let f = partition.to_frequency();
            let chains = oblak_all_chains(&f, *limit).map_err(e)?;
            let entries: Vec<ChainEntry> = chains
                .into_iter()
                .map(|c| {
                    let valuation = c.valuation();
                    let del = c.del().map_err(|x| x.to_string());
                    let del_valuation_ok = del.as_ref().is_ok_and(|d| d.valuation() == valuation.reduce());
                    ChainEntry {
                        chain: c,
                        valuation,
                        del,
                        del_valuation_ok,
                    }
                })
                .collect();
            let consistent = entries
                .iter()
                .all(|x| x.valuation == entries[0].valuation && x.del_valuation_ok);
            let rec = OblakChainsRecord {
                frequency: f,
                chains: entries,
                consistent,
            };
            emit(json, out, &rec)?;
            if !consistent {
                return Ok(EXIT_FAIL);
            }
        }
        Command::CheckSquare { partition, index } => {
            let f = partition.to_frequency();
            let d = apply_del(&f);
            let i = *index;
            emit(
                json,
                out,
                &SquareRecord {
                    val: evaluate(&f, i),
                    val_del: evaluate(&d, i),
                    del_of_ann: apply_del(&annihilate(&f, i)),
                    ann_of_del: annihilate(&d, i),
                    left_admissible: is_left_admissible(&f, i),
                    right_admissible_in_del: is_right_admissible(&d, i),
                    commutes: check_commuting_square(&f, i),
                    index: i,
                    frequency: f,
                    del: d,
                },
            )?;
        }
        Command::Fiber { q } => {
            emit(json, out, &FiberRecord(fiber(q).map_err(e)?))?;
        }
        Command::Coords { partition } => {
            let (q, coords) = coordinates_of(partition);
            let deltas = delta(&q).map_err(e)?;
            let code = fiber_code(&q, &coords).map_err(e)?;
            emit(
                json,
                out,
                &CoordsRecord {
                    partition: partition.clone(),
                    descent_map: q,
                    deltas,
                    coords,
                    code,
                },
            )?;
        }
        Command::Maxparts { q } => {
            let p = max_parts_partition(q).map_err(e)?;
            emit(
                json,
                out,
                &MaxPartsRecord {
                    q: q.clone(),
                    parts: p.length(),
                    partition: p,
                },
            )?;
        }
        Command::Symmetry { q, coords, positions } => {
            let c = BoxCoordinates(coords.0.clone());
            if positions.0.contains(&0) {
                return Err("positions are 1-based".into());
            }
            let zero_based: Vec<usize> = positions.0.iter().map(|j| j - 1).collect();
            let image = symmetry_map(q, &c, &zero_based).map_err(e)?;
            let before = burge_core::burge::decode(&fiber_code(q, &c).map_err(e)?).to_partition();
            let after = burge_core::burge::decode(&fiber_code(q, &image).map_err(e)?).to_partition();
            emit(
                json,
                out,
                &SymmetryRecord {
                    q: q.clone(),
                    coords: c,
                    positions: positions.0.clone(),
                    image,
                    before,
                    after,
                },
            )?;
        }
        Command::Foata { q, coords } => {
            let c = BoxCoordinates(coords.0.clone());
            let code = fiber_code(q, &c).map_err(e)?;
            let foata = foata_fiber(q, &c).map_err(e)?;
            let image = path_to_partition(&foata);
            emit(
                json,
                out,
                &FoataRecord {
                    q: q.clone(),
                    partition: burge_core::burge::decode(&code).to_partition(),
                    coords: c,
                    code,
                    foata,
                    hooks: diagonal_hooks(&image),
                    durfee: durfee(&image),
                    image,
                },
            )?;
        }
        Command::Hooks { partition } => {
            emit(
                json,
                out,
                &HooksRecord {
                    partition: partition.clone(),
                    hooks: diagonal_hooks(partition),
                    durfee: durfee(partition),
                },
            )?;
        }
        Command::Durfee { partition } => {
            emit(
                json,
                out,
                &DurfeeRecord {
                    partition: partition.clone(),
                    durfee: durfee(partition),
                },
            )?;
        }
        Command::Verify {
            partition,
            field,
            trials,
            tolerance,
            witness_only,
        } => {
            let trials = if *witness_only { 0 } else { *trials };
            let r = verify_restriction(partition, field.field, trials, cli.seed, *tolerance).map_err(e)?;
            let status = Status::from_bool(r.passed);
            emit(
                json,
                out,
                &VerifyRecord {
                    partition: r.partition,
                    field: r.field,
                    expected: r.expected,
                    observed: r.observed,
                    random: r.random,
                    misses: r.misses,
                    status,
                },
            )?;
            if !status.passed() {
                return Ok(EXIT_FAIL);
            }
        }
        Command::ScanMax {
            partition,
            field,
            budget,
        } => {
            let r = exhaustive_max_type(partition, *field, *budget).map_err(e)?;
            let status = Status::from_bool(r.passed && r.nilpotent == r.candidates);
            emit(
                json,
                out,
                &ScanRecord {
                    partition: r.partition,
                    field: r.field,
                    expected: r.expected,
                    observed: r.maximum,
                    candidates: r.candidates,
                    nilpotent: r.nilpotent,
                    types: r.types,
                    status,
                },
            )?;
            if !status.passed() {
                return Ok(EXIT_FAIL);
            }
        }
        Command::Sweep {
            max_n,
            checks,
            field,
            trials,
            threads,
        } => {
            let checks = if checks.is_empty() {
                Suite::ALL.to_vec()
            } else {
                checks.clone()
            };
            let cfg = SweepConfig {
                max_n: *max_n,
                checks,
                field: field.field,
                trials: *trials,
                threads: (*threads).max(1),
                seed: cli.seed,
            };
            let report = run_sweep(&cfg);
            emit(json, out, &report)?;
            if !report.passed {
                return Ok(EXIT_FAIL);
            }
        }
    }
    Ok(EXIT_OK)
}
