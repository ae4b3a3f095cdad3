//! Output records. Every record is printed either as JSON or as a short
//! text block, and the JSON form parses back to an equal value.

use std::fmt;

use burge_core::fiber::{BoxCoordinates, DeltaVector, FiberEntry};
use burge_core::matrix::PrimeField;
use burge_core::{BurgeWord, FrequencySeq, OblakChain, Partition, Word};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodeRecord {
    pub partition: Partition,
    pub frequency: FrequencySeq,
    pub code: BurgeWord,
}

impl fmt::Display for EncodeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeRecord {
    pub code: BurgeWord,
    pub frequency: FrequencySeq,
    pub partition: Partition,
}

impl fmt::Display for DecodeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (f={})", self.partition, self.frequency)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmapRecord {
    pub partition: Partition,
    pub descent_map: Partition,
}

impl fmt::Display for DmapRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descent_map.to_comma_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRow {
    pub step: usize,
    pub frequency: FrequencySeq,
    pub partition: Partition,
    pub letter: String,
    pub descent_map: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub partition: Partition,
    pub code: BurgeWord,
    pub rows: Vec<ChainRow>,
}

impl fmt::Display for ChainRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4}  {:<24} {:<20} {:<6} Des", "i", "f", "partition", "letter")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>4}  {:<24} {:<20} {:<6} {}",
                r.step,
                r.frequency.to_string(),
                r.partition.to_string(),
                r.letter,
                r.descent_map
            )?;
        }
        write!(f, "code {}", self.code)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OblakRecord {
    pub frequency: FrequencySeq,
    pub indices: Vec<usize>,
    pub values: Vec<usize>,
    pub valuation: Partition,
    pub descent_map: Partition,
    pub agrees: bool,
}

impl fmt::Display for OblakRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "indices {:?}", self.indices)?;
        writeln!(f, "values  {:?}", self.values)?;
        writeln!(f, "Obk     {}", self.valuation)?;
        write!(f, "Des     {}", self.descent_map)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub chain: OblakChain,
    pub valuation: Partition,
    /// `∂C`, or the error it raised.
    pub del: Result<OblakChain, String>,
    pub del_valuation_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OblakChainsRecord {
    pub frequency: FrequencySeq,
    pub chains: Vec<ChainEntry>,
    pub consistent: bool,
}

impl fmt::Display for OblakChainsRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} chains for {}", self.chains.len(), self.frequency)?;
        for e in &self.chains {
            let del = match &e.del {
                Ok(d) => format!("∂ indices {:?}", d.indices),
                Err(msg) => format!("∂ failed: {msg}"),
            };
            writeln!(f, "  indices {:?}  valuation {}  {}", e.chain.indices, e.valuation, del)?;
        }
        write!(f, "consistent: {}", self.consistent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareRecord {
    pub frequency: FrequencySeq,
    pub del: FrequencySeq,
    pub index: usize,
    pub val: usize,
    pub val_del: usize,
    pub del_of_ann: FrequencySeq,
    pub ann_of_del: FrequencySeq,
    pub left_admissible: bool,
    pub right_admissible_in_del: bool,
    pub commutes: bool,
}

impl fmt::Display for SquareRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "val_{}(f) = {}, val_{}(∂f) = {}",
            self.index, self.val, self.index, self.val_del
        )?;
        writeln!(f, "∂(ann_{}(f)) = {}", self.index, self.del_of_ann)?;
        writeln!(f, "ann_{}(∂f) = {}", self.index, self.ann_of_del)?;
        write!(f, "commutes: {}", self.commutes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiberRecord(pub Vec<FiberEntry>);

impl fmt::Display for FiberRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<14} {:<20} {:<22} parts", "coords", "code", "partition")?;
        for (n, e) in self.0.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "{:<14} {:<20} {:<22} {}",
                e.coords.to_string(),
                e.code.to_string(),
                e.partition.to_string(),
                e.parts
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordsRecord {
    pub partition: Partition,
    pub descent_map: Partition,
    pub deltas: DeltaVector,
    pub coords: BoxCoordinates,
    pub code: BurgeWord,
}

impl fmt::Display for CoordsRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q={} delta={:?} c={} code={}",
            self.descent_map, self.deltas.0, self.coords, self.code
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxPartsRecord {
    pub q: Partition,
    pub partition: Partition,
    pub parts: usize,
}

impl fmt::Display for MaxPartsRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} parts)", self.partition, self.parts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryRecord {
    pub q: Partition,
    pub coords: BoxCoordinates,
    /// 1-based positions that were reflected.
    pub positions: Vec<usize>,
    pub image: BoxCoordinates,
    pub before: Partition,
    pub after: Partition,
}

impl fmt::Display for SymmetryRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} -> {} {}", self.coords, self.before, self.image, self.after)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoataRecord {
    pub q: Partition,
    pub coords: BoxCoordinates,
    pub code: BurgeWord,
    pub foata: Word,
    pub partition: Partition,
    pub image: Partition,
    pub hooks: Partition,
    pub durfee: usize,
}

impl fmt::Display for FoataRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code  {}  {}", self.code, self.partition)?;
        writeln!(f, "phi   {}  {}", self.foata, self.image)?;
        write!(f, "hooks {}  durfee {}", self.hooks, self.durfee)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HooksRecord {
    pub partition: Partition,
    pub hooks: Partition,
    pub durfee: usize,
}

impl fmt::Display for HooksRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hooks)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DurfeeRecord {
    pub partition: Partition,
    pub durfee: usize,
}

impl fmt::Display for DurfeeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.durfee)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub partition: Partition,
    pub field: PrimeField,
    pub expected: Partition,
    pub observed: Partition,
    pub random: Vec<Partition>,
    pub misses: usize,
    pub status: Status,
}

impl fmt::Display for VerifyRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "B of type {} over GF({})", self.partition, self.field.modulus())?;
        writeln!(f, "expected ∂P   {}", self.expected)?;
        writeln!(f, "witness       {}", self.observed)?;
        if !self.random.is_empty() {
            writeln!(f, "random misses {}/{}", self.misses, self.random.len())?;
        }
        write!(f, "{}", self.status)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub partition: Partition,
    pub field: PrimeField,
    pub expected: Partition,
    pub observed: Option<Partition>,
    pub candidates: u128,
    pub nilpotent: u128,
    pub types: Vec<Partition>,
    pub status: Status,
}

impl fmt::Display for ScanRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "B of type {} over GF({})", self.partition, self.field.modulus())?;
        writeln!(
            f,
            "scanned {} candidates, {} nilpotent",
            self.candidates, self.nilpotent
        )?;
        let types: Vec<String> = self.types.iter().map(Partition::to_string).collect();
        writeln!(f, "types   {}", types.join(" "))?;
        let max = self.observed.as_ref().map_or("none".to_string(), Partition::to_string);
        writeln!(f, "maximum {max}  Des {}", self.expected)?;
        write!(f, "{}", self.status)
    }
}
