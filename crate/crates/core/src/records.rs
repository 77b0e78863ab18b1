//! Flat records for the command-line tool.
//!
//! Every record type serializes to one JSON object per line and to CSV with a
//! fixed header. Diagrams use the ASCII grammar of [`SignedYoungDiagram`]; in
//! CSV, partitions are space-separated parts (`""` is the empty partition),
//! optional diagrams are `""` when absent, and lists of diagrams are joined
//! with `|`. Parsing checks internal consistency, so a record that parses
//! names a well-formed object.
//!
//! CSV headers:
//!
//! | record | header |
//! |---|---|
//! | orbit | `diagram,d,dimension,richardson` |
//! | stratum | `m,l,mu,diagram,braid_rank,cyclic_modulus` |
//! | orbital complex | `orbit,modulus,exponent,m` |
//! | sheaf | `type,m,l,mu,tau,rho_first,rho_second,psi_modulus,psi_exponent,cuspidal,nilpotent_support` |
//! | levi | `induced,kind,m,block_sizes,theta_blocks,source_orbits,signs,l_sequence` |
//! | verification | `check,passed,cases,counterexample` |
//!
//! In a sheaf row `tau` is meaningful only for `type = odd` and the `rho_*`
//! columns only for `type = even`, which resolves the `""` ambiguity between
//! an empty partition and an absent one. `theta_blocks` is written as
//! space-separated `p:q` pairs and `signs` as a string over `+-`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::classify::{CharacterSheafLabel, Induction, LeviDatum, LeviKind, OrbitalComplex};
use crate::combinat::{Bipartition, CyclicCharacter, Partition};
use crate::error::{Error, Result};
use crate::orbits::{orbit_dimension, PairContext, Sign, SignedYoungDiagram};
use crate::strata::{pi1_data, DualStratumLabel};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidRecord(msg.into())
}

/// Common behaviour of the record types.
pub trait Record: Serialize + DeserializeOwned + Sized {
    const KIND: &'static str;
    const CSV_HEADER: &'static [&'static str];

    fn to_csv_fields(&self) -> Vec<String>;
    fn from_csv_fields(fields: &csv::StringRecord) -> Result<Self>;
    /// Context-free consistency of the fields.
    fn check(&self) -> Result<()>;
    /// One human-readable line.
    fn pretty(&self) -> String;

    fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    fn from_json(s: &str) -> Result<Self> {
        let r: Self = serde_json::from_str(s).map_err(|e| Error::Parse {
            column: e.column(),
            message: format!("{} record: {e}", Self::KIND),
        })?;
        r.check()?;
        Ok(r)
    }
}

pub fn to_json_lines<R: Record>(records: &[R]) -> String {
    records.iter().fold(String::new(), |mut out, r| {
        out.push_str(&r.to_json());
        out.push('\n');
        out
    })
}

pub fn parse_json_lines<R: Record>(text: &str) -> Result<Vec<R>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(R::from_json)
        .collect()
}

pub fn to_csv<R: Record>(records: &[R]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(R::CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record(r.to_csv_fields()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn parse_csv<R: Record>(text: &str) -> Result<Vec<R>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| invalid(e.to_string()))?;
    if header.iter().ne(R::CSV_HEADER.iter().copied()) {
        return Err(invalid(format!(
            "expected header {}",
            R::CSV_HEADER.join(",")
        )));
    }
    rdr.records()
        .map(|row| {
            let row = row.map_err(|e| invalid(e.to_string()))?;
            let r = R::from_csv_fields(&row)?;
            r.check()?;
            Ok(r)
        })
        .collect()
}

pub fn to_pretty<R: Record>(records: &[R]) -> String {
    records.iter().fold(String::new(), |mut out, r| {
        let _ = writeln!(out, "{}", r.pretty());
        out
    })
}

fn field(row: &csv::StringRecord, i: usize) -> Result<&str> {
    row.get(i)
        .ok_or_else(|| invalid(format!("missing column {}", i + 1)))
}

fn num<T: FromStr>(row: &csv::StringRecord, i: usize) -> Result<T> {
    let s = field(row, i)?;
    s.parse()
        .map_err(|_| invalid(format!("column {}: not a number: {s:?}", i + 1)))
}

fn flag(row: &csv::StringRecord, i: usize) -> Result<bool> {
    match field(row, i)? {
        "true" => Ok(true),
        "false" => Ok(false),
        s => Err(invalid(format!(
            "column {}: expected true or false, got {s:?}",
            i + 1
        ))),
    }
}

fn parts_to_csv(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn parts_from_csv(s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| invalid(format!("bad part {t:?}"))))
        .collect()
}

fn opt_from_csv(s: &str) -> Option<String> {
    (!s.is_empty()).then(|| s.to_string())
}

fn diagram(s: &str) -> Result<SignedYoungDiagram> {
    s.parse()
}

/// A character of `Z/modulus` as `ζ ↦ ζ^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterRecord {
    pub modulus: u32,
    pub exponent: u32,
}

impl From<CyclicCharacter> for CharacterRecord {
    fn from(c: CyclicCharacter) -> Self {
        Self {
            modulus: c.modulus(),
            exponent: c.exponent(),
        }
    }
}

impl CharacterRecord {
    pub fn to_character(self) -> Result<CyclicCharacter> {
        CyclicCharacter::new(self.modulus, self.exponent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitRecord {
    pub diagram: String,
    pub d: u32,
    pub dimension: u64,
    pub richardson: bool,
}

impl OrbitRecord {
    pub fn new(lambda: &SignedYoungDiagram, ctx: PairContext) -> Result<Self> {
        Ok(Self {
            diagram: lambda.to_string(),
            d: lambda.d_lambda(),
            dimension: orbit_dimension(lambda, ctx)?,
            richardson: lambda.is_richardson(),
        })
    }

    pub fn orbit(&self) -> Result<SignedYoungDiagram> {
        diagram(&self.diagram)
    }
}

impl Record for OrbitRecord {
    const KIND: &'static str = "orbit";
    const CSV_HEADER: &'static [&'static str] = &["diagram", "d", "dimension", "richardson"];

    fn to_csv_fields(&self) -> Vec<String> {
        vec![
            self.diagram.clone(),
            self.d.to_string(),
            self.dimension.to_string(),
            self.richardson.to_string(),
        ]
    }

    fn from_csv_fields(row: &csv::StringRecord) -> Result<Self> {
        Ok(Self {
            diagram: field(row, 0)?.to_string(),
            d: num(row, 1)?,
            dimension: num(row, 2)?,
            richardson: flag(row, 3)?,
        })
    }

    fn check(&self) -> Result<()> {
        let lambda = self.orbit()?;
        let (p, q) = lambda.signature();
        let expected = Self::new(&lambda, PairContext::new(p, q)?)?;
        if &expected != self {
            return Err(invalid(format!(
                "orbit record {} disagrees with its diagram",
                self.to_json()
            )));
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        format!(
            "{:<24} d={:<3} dim={:<5} {}",
            self.diagram,
            self.d,
            self.dimension,
            if self.richardson { "richardson" } else { "" }
        )
        .trim_end()
        .to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumRecord {
    pub m: u32,
    pub l: u32,
    pub mu: Option<String>,
    pub diagram: String,
    pub braid_rank: u32,
    pub cyclic_modulus: u32,
}

impl StratumRecord {
    pub fn new(label: &DualStratumLabel) -> Self {
        let pi = pi1_data(label);
        Self {
            m: label.m(),
            l: label.l(),
            mu: label.mu().map(ToString::to_string),
            diagram: label.merged().to_string(),
            braid_rank: pi.braid_rank,
            cyclic_modulus: pi.cyclic_modulus,
        }
    }

    pub fn label(&self) -> Result<DualStratumLabel> {
        let mu = self.mu.as_deref().map(diagram).transpose()?;
        DualStratumLabel::new(self.m, self.l, mu)
    }
}

impl Record for StratumRecord {
    const KIND: &'static str = "stratum";
    const CSV_HEADER: &'static [&'static str] =
        &["m", "l", "mu", "diagram", "braid_rank", "cyclic_modulus"];

    fn to_csv_fields(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.l.to_string(),
            self.mu.clone().unwrap_or_default(),
            self.diagram.clone(),
            self.braid_rank.to_string(),
            self.cyclic_modulus.to_string(),
        ]
    }

    fn from_csv_fields(row: &csv::StringRecord) -> Result<Self> {
        Ok(Self {
            m: num(row, 0)?,
            l: num(row, 1)?,
            mu: opt_from_csv(field(row, 2)?),
            diagram: field(row, 3)?.to_string(),
            braid_rank: num(row, 4)?,
            cyclic_modulus: num(row, 5)?,
        })
    }

    fn check(&self) -> Result<()> {
        if Self::new(&self.label()?) != *self {
            return Err(invalid(format!(
                "stratum record {} is inconsistent",
                self.to_json()
            )));
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        format!(
            "m={} l={} μ={:<16} {:<24} π₁ = B_{} × Z/{}",
            self.m,
            self.l,
            self.mu.as_deref().unwrap_or("∅"),
            self.diagram,
            self.braid_rank,
            self.cyclic_modulus
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexRecord {
    pub orbit: String,
    pub character: CharacterRecord,
    pub m: u32,
}

impl ComplexRecord {
    pub fn new(c: &OrbitalComplex) -> Self {
        Self {
            orbit: c.orbit().to_string(),
            character: c.character().into(),
            m: c.central_order(),
        }
    }

    pub fn complex(&self) -> Result<OrbitalComplex> {
        OrbitalComplex::new(diagram(&self.orbit)?, self.character.to_character()?)
    }
}

impl Record for ComplexRecord {
    const KIND: &'static str = "orbital-complex";
    const CSV_HEADER: &'static [&'static str] = &["orbit", "modulus", "exponent", "m"];

    fn to_csv_fields(&self) -> Vec<String> {
        vec![
            self.orbit.clone(),
            self.character.modulus.to_string(),
            self.character.exponent.to_string(),
            self.m.to_string(),
        ]
    }

    fn from_csv_fields(row: &csv::StringRecord) -> Result<Self> {
        Ok(Self {
            orbit: field(row, 0)?.to_string(),
            character: CharacterRecord {
                modulus: num(row, 1)?,
                exponent: num(row, 2)?,
            },
            m: num(row, 3)?,
        })
    }

    fn check(&self) -> Result<()> {
        let c = self.complex()?;
        if c.central_order() != self.m {
            return Err(invalid(format!(
                "character {} has order {}, record says m = {}",
                c.character(),
                c.central_order(),
                self.m
            )));
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        format!(
            "IC({}, {}/{})  m={}",
            self.orbit, self.character.exponent, self.character.modulus, self.m
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SheafType {
    Odd,
    Even,
}

/// A character sheaf. `m` is the stratum's `m`, so an even-type record with
/// `m = k` has central character of order `2k` (the modulus of `psi`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SheafRecord {
    #[serde(rename = "type")]
    pub kind: SheafType,
    pub m: u32,
    pub l: u32,
    pub mu: Option<String>,
    pub tau: Option<Vec<u32>>,
    pub rho: Option<(Vec<u32>, Vec<u32>)>,
    pub psi: CharacterRecord,
    pub cuspidal: bool,
    pub nilpotent_support: bool,
}

impl SheafRecord {
    pub fn new(s: &CharacterSheafLabel, cuspidal: bool) -> Self {
        let stratum = s.stratum();
        let (kind, tau, rho) = match s {
            CharacterSheafLabel::Odd { tau, .. } => {
                (SheafType::Odd, Some(tau.parts().to_vec()), None)
            }
            CharacterSheafLabel::Even { rho, .. } => (
                SheafType::Even,
                None,
                Some((rho.first.parts().to_vec(), rho.second.parts().to_vec())),
            ),
        };
        Self {
            kind,
            m: stratum.m(),
            l: stratum.l(),
            mu: stratum.mu().map(ToString::to_string),
            tau,
            rho,
            psi: s.psi().into(),
            cuspidal,
            nilpotent_support: s.is_nilpotent_support(),
        }
    }

    pub fn label(&self) -> Result<CharacterSheafLabel> {
        let mu = self.mu.as_deref().map(diagram).transpose()?;
        let stratum = DualStratumLabel::new(self.m, self.l, mu)?;
        let psi = self.psi.to_character()?;
        match (self.kind, &self.tau, &self.rho) {
            (SheafType::Odd, Some(tau), None) => Ok(CharacterSheafLabel::Odd {
                stratum,
                tau: Partition::new(tau.clone())?,
                psi,
            }),
            (SheafType::Even, None, Some((a, b))) => Ok(CharacterSheafLabel::Even {
                stratum,
                rho: Bipartition::new(Partition::new(a.clone())?, Partition::new(b.clone())?),
                psi,
            }),
            (SheafType::Odd, _, _) => Err(invalid("odd sheaf needs tau and no rho")),
            (SheafType::Even, _, _) => Err(invalid("even sheaf needs rho and no tau")),
        }
    }
}

impl Record for SheafRecord {
    const KIND: &'static str = "sheaf";
    const CSV_HEADER: &'static [&'static str] = &[
        "type",
        "m",
        "l",
        "mu",
        "tau",
        "rho_first",
        "rho_second",
        "psi_modulus",
        "psi_exponent",
        "cuspidal",
        "nilpotent_support",
    ];

    fn to_csv_fields(&self) -> Vec<String> {
        let (kind, tau, rho_first, rho_second) = match (self.kind, &self.tau, &self.rho) {
            (SheafType::Odd, tau, _) => (
                "odd",
                parts_to_csv(tau.as_deref().unwrap_or_default()),
                String::new(),
                String::new(),
            ),
            (SheafType::Even, _, rho) => {
                let (a, b) = rho.clone().unwrap_or_default();
                ("even", String::new(), parts_to_csv(&a), parts_to_csv(&b))
            }
        };
        vec![
            kind.to_string(),
            self.m.to_string(),
            self.l.to_string(),
            self.mu.clone().unwrap_or_default(),
            tau,
            rho_first,
            rho_second,
            self.psi.modulus.to_string(),
            self.psi.exponent.to_string(),
            self.cuspidal.to_string(),
            self.nilpotent_support.to_string(),
        ]
    }

    fn from_csv_fields(row: &csv::StringRecord) -> Result<Self> {
        let kind = match field(row, 0)? {
            "odd" => SheafType::Odd,
            "even" => SheafType::Even,
            s => {
                return Err(invalid(format!(
                    "sheaf type must be odd or even, got {s:?}"
                )))
            }
        };
        let (tau, rho) = match kind {
            SheafType::Odd => {
                if !field(row, 5)?.is_empty() || !field(row, 6)?.is_empty() {
                    return Err(invalid("odd sheaf row has rho columns"));
                }
                (Some(parts_from_csv(field(row, 4)?)?), None)
            }
            SheafType::Even => {
                if !field(row, 4)?.is_empty() {
                    return Err(invalid("even sheaf row has a tau column"));
                }
                (
                    None,
                    Some((
                        parts_from_csv(field(row, 5)?)?,
                        parts_from_csv(field(row, 6)?)?,
                    )),
                )
            }
        };
        Ok(Self {
            kind,
            m: num(row, 1)?,
            l: num(row, 2)?,
            mu: opt_from_csv(field(row, 3)?),
            tau,
            rho,
            psi: CharacterRecord {
                modulus: num(row, 7)?,
                exponent: num(row, 8)?,
            },
            cuspidal: flag(row, 9)?,
            nilpotent_support: flag(row, 10)?,
        })
    }

    fn check(&self) -> Result<()> {
        let label = self.label()?;
        if label.is_nilpotent_support() != self.nilpotent_support {
            return Err(invalid("nilpotent_support flag disagrees with the label"));
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        let local = match (&self.tau, &self.rho) {
            (Some(t), _) => format!("τ={}", Partition::from_unsorted(t.clone())),
            (_, Some((a, b))) => format!(
                "ρ={}",
                Bipartition::new(
                    Partition::from_unsorted(a.clone()),
                    Partition::from_unsorted(b.clone())
                )
            ),
            _ => String::new(),
        };
        let mut flags = Vec::new();
        if self.cuspidal {
            flags.push("cuspidal");
        }
        if self.nilpotent_support {
            flags.push("nilpotent-support");
        }
        format!(
            "{:<4} m={} l={} μ={:<14} {:<14} ψ={}/{} {}",
            match self.kind {
                SheafType::Odd => "odd",
                SheafType::Even => "even",
            },
            self.m,
            self.l,
            self.mu.as_deref().unwrap_or("∅"),
            local,
            self.psi.exponent,
            self.psi.modulus,
            flags.join(" ")
        )
        .trim_end()
        .to_string()
    }
}

/// A Levi datum, or `induced = false` with empty sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeviRecord {
    pub induced: bool,
    pub kind: Option<String>,
    pub m: u32,
    pub block_sizes: Vec<u32>,
    pub theta_blocks: Vec<(u32, u32)>,
    pub source_orbits: Vec<String>,
    pub signs: String,
    pub l_sequence: Vec<u32>,
}

fn kind_from_str(s: &str) -> Result<LeviKind> {
    [
        LeviKind::SignBlocks,
        LeviKind::PairedBlocks,
        LeviKind::StratumTimesOrbit,
        LeviKind::SplitRow,
    ]
    .into_iter()
    .find(|k| k.as_str() == s)
    .ok_or_else(|| invalid(format!("unknown Levi kind {s:?}")))
}

impl LeviRecord {
    pub fn new(levi: &LeviDatum) -> Self {
        Self {
            induced: true,
            kind: Some(levi.kind.as_str().to_string()),
            m: levi.m,
            block_sizes: levi.block_sizes.clone(),
            theta_blocks: levi.theta_blocks.clone(),
            source_orbits: levi.source_orbits.iter().map(ToString::to_string).collect(),
            signs: levi.signs.iter().map(|s| s.as_char()).collect(),
            l_sequence: levi.l_sequence.clone(),
        }
    }

    pub fn from_induction(ind: &Induction) -> Self {
        match ind {
            Induction::Induced(levi) => Self::new(levi),
            Induction::NotInduced => Self {
                induced: false,
                kind: None,
                m: 0,
                block_sizes: Vec::new(),
                theta_blocks: Vec::new(),
                source_orbits: Vec::new(),
                signs: String::new(),
                l_sequence: Vec::new(),
            },
        }
    }

    pub fn induction(&self) -> Result<Induction> {
        if !self.induced {
            if *self != Self::from_induction(&Induction::NotInduced) {
                return Err(invalid("a not-induced record carries Levi data"));
            }
            return Ok(Induction::NotInduced);
        }
        let kind = kind_from_str(
            self.kind
                .as_deref()
                .ok_or_else(|| invalid("missing kind"))?,
        )?;
        let signs = self
            .signs
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(invalid(format!("bad sign {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Induction::Induced(LeviDatum {
            kind,
            m: self.m,
            block_sizes: self.block_sizes.clone(),
            theta_blocks: self.theta_blocks.clone(),
            source_orbits: self
                .source_orbits
                .iter()
                .map(|s| diagram(s))
                .collect::<Result<_>>()?,
            signs,
            l_sequence: self.l_sequence.clone(),
        }))
    }
}

impl Record for LeviRecord {
    const KIND: &'static str = "levi";
    const CSV_HEADER: &'static [&'static str] = &[
        "induced",
        "kind",
        "m",
        "block_sizes",
        "theta_blocks",
        "source_orbits",
        "signs",
        "l_sequence",
    ];

    fn to_csv_fields(&self) -> Vec<String> {
        vec![
            self.induced.to_string(),
            self.kind.clone().unwrap_or_default(),
            self.m.to_string(),
            parts_to_csv(&self.block_sizes),
            self.theta_blocks
                .iter()
                .map(|(a, b)| format!("{a}:{b}"))
                .collect::<Vec<_>>()
                .join(" "),
            self.source_orbits.join("|"),
            self.signs.clone(),
            parts_to_csv(&self.l_sequence),
        ]
    }

    fn from_csv_fields(row: &csv::StringRecord) -> Result<Self> {
        let theta_blocks = field(row, 4)?
            .split_whitespace()
            .map(|t| {
                let (a, b) = t
                    .split_once(':')
                    .ok_or_else(|| invalid(format!("bad θ-block {t:?}")))?;
                let parse = |s: &str| {
                    s.parse::<u32>()
                        .map_err(|_| invalid(format!("bad θ-block {t:?}")))
                };
                Ok((parse(a)?, parse(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let sources = field(row, 5)?;
        Ok(Self {
            induced: flag(row, 0)?,
            kind: opt_from_csv(field(row, 1)?),
            m: num(row, 2)?,
            block_sizes: parts_from_csv(field(row, 3)?)?,
            theta_blocks,
            source_orbits: if sources.is_empty() {
                Vec::new()
            } else {
                sources.split('|').map(str::to_string).collect()
            },
            signs: field(row, 6)?.to_string(),
            l_sequence: parts_from_csv(field(row, 7)?)?,
        })
    }

    fn check(&self) -> Result<()> {
        let ind = self.induction()?;
        if Self::from_induction(&ind) != *self {
            return Err(invalid("Levi record is not in normal form"));
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        if !self.induced {
            return "not induced".to_string();
        }
        let blocks: Vec<String> = self.block_sizes.iter().map(|b| format!("GL_{b}")).collect();
        let theta: Vec<String> = self
            .theta_blocks
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        format!(
            "{}: L = S({})  θ-blocks {}  O_L = {}  l = ({})",
            self.kind.as_deref().unwrap_or(""),
            blocks.join(" × "),
            theta.join(" "),
            self.source_orbits.join(" × "),
            self.l_sequence
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationRecord {
    pub check: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl Record for VerificationRecord {
    const KIND: &'static str = "verification";
    const CSV_HEADER: &'static [&'static str] = &["check", "passed", "cases", "counterexample"];

    fn to_csv_fields(&self) -> Vec<String> {
        vec![
            self.check.clone(),
            self.passed.to_string(),
            self.cases.to_string(),
            self.counterexample.clone().unwrap_or_default(),
        ]
    }

    fn from_csv_fields(row: &csv::StringRecord) -> Result<Self> {
        Ok(Self {
            check: field(row, 0)?.to_string(),
            passed: flag(row, 1)?,
            cases: num(row, 2)?,
            counterexample: opt_from_csv(field(row, 3)?),
        })
    }

    fn check(&self) -> Result<()> {
        if self.passed == self.counterexample.is_some() {
            return Err(invalid(
                "a failed check carries a counterexample, a passed one does not",
            ));
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match &self.counterexample {
            Some(c) => format!("{status} {:<28} {:>7} cases  {c}", self.check, self.cases),
            None => format!("{status} {:<28} {:>7} cases", self.check, self.cases),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{
        all_character_sheaves, all_orbital_complexes, cuspidal_sheaves, induction_datum_for_sheaf,
        levi_for_nilpotent_support,
    };
    use crate::orbits::enumerate_orbits;
    use crate::strata::cs_orbits;
    use std::collections::HashSet;

    fn round_trip<R: Record + PartialEq + std::fmt::Debug>(records: &[R]) {
        assert_eq!(
            &parse_json_lines::<R>(&to_json_lines(records)).unwrap(),
            records
        );
        assert_eq!(&parse_csv::<R>(&to_csv(records)).unwrap(), records);
    }

    #[test]
    fn all_record_kinds_round_trip() {
        for ctx in PairContext::all_up_to(6) {
            let orbits: Vec<_> = enumerate_orbits(ctx)
                .iter()
                .map(|o| OrbitRecord::new(o, ctx).unwrap())
                .collect();
            round_trip(&orbits);
            round_trip(
                &cs_orbits(ctx)
                    .iter()
                    .map(StratumRecord::new)
                    .collect::<Vec<_>>(),
            );
            round_trip(
                &all_orbital_complexes(ctx)
                    .iter()
                    .map(ComplexRecord::new)
                    .collect::<Vec<_>>(),
            );
            let cusp: HashSet<_> = cuspidal_sheaves(ctx).into_iter().collect();
            let sheaves: Vec<_> = all_character_sheaves(ctx)
                .iter()
                .map(|s| SheafRecord::new(s, cusp.contains(s)))
                .collect();
            round_trip(&sheaves);
            for r in &sheaves {
                assert_eq!(SheafRecord::new(&r.label().unwrap(), r.cuspidal), *r);
            }
            let levis: Vec<_> = all_character_sheaves(ctx)
                .iter()
                .map(|s| LeviRecord::from_induction(&induction_datum_for_sheaf(s, ctx).unwrap()))
                .collect();
            round_trip(&levis);
        }
    }

    #[test]
    fn sheaf_json_schema_is_stable() {
        let s = &all_character_sheaves(PairContext::new(1, 1).unwrap())[0];
        let v: serde_json::Value =
            serde_json::from_str(&SheafRecord::new(s, false).to_json()).unwrap();
        let keys: HashSet<_> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let expected: HashSet<_> = [
            "type",
            "m",
            "l",
            "mu",
            "tau",
            "rho",
            "psi",
            "cuspidal",
            "nilpotent_support",
        ]
        .into_iter()
        .collect();
        assert_eq!(keys, expected);
        let psi: HashSet<_> = v["psi"]
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        assert_eq!(psi, ["modulus", "exponent"].into_iter().collect());
    }

    #[test]
    fn empty_tau_and_absent_tau_are_distinct_in_csv() {
        let ctx = PairContext::new(2, 1).unwrap();
        let s: Vec<_> = crate::classify::character_sheaves(ctx, 3)
            .iter()
            .map(|s| SheafRecord::new(s, true))
            .collect();
        assert_eq!(s[0].tau, Some(vec![]));
        round_trip(&s);
    }

    #[test]
    fn inconsistent_records_are_rejected() {
        assert!(OrbitRecord::from_json(
            r#"{"diagram":"2+^1","d":1,"dimension":1,"richardson":true}"#
        )
        .is_err());
        assert!(OrbitRecord::from_json(
            r#"{"diagram":"2+^1","d":2,"dimension":1,"richardson":true}"#
        )
        .is_ok());
        assert!(ComplexRecord::from_json(
            r#"{"orbit":"3+^1","character":{"modulus":3,"exponent":1},"m":1}"#
        )
        .is_err());
        assert!(ComplexRecord::from_json(
            r#"{"orbit":"3+^1","character":{"modulus":2,"exponent":1},"m":2}"#
        )
        .is_err());
        let err = OrbitRecord::from_json(r#"{"diagram":"2+^1","d":2,"extra":0}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(matches!(
            OrbitRecord::from_json(r#"{"diagram":"2x^1","d":2,"dimension":1,"richardson":true}"#),
            Err(Error::Parse { column: 2, .. })
        ));
        assert!(parse_csv::<OrbitRecord>("diagram,d\n2+^1,2\n").is_err());
    }

    #[test]
    fn levi_record_pretty() {
        let levi = levi_for_nilpotent_support(&"6+^2".parse().unwrap(), 3).unwrap();
        let r = LeviRecord::new(&levi);
        assert_eq!(r.signs, "+-");
        assert_eq!(
            r.pretty(),
            "sign-blocks: L = S(GL_6 × GL_6)  θ-blocks (4,2) (2,4)  O_L = 3+^2 × 3-^2  l = (2,2)"
        );
        round_trip(&[r]);
    }
}
