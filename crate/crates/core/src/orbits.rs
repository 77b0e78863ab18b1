//! Signed Young diagrams and the nilpotent K-orbits they label.
//!
//! A diagram is kept in block normal form: one block per distinct row length,
//! lengths strictly decreasing, each block carrying the number of rows that
//! start with `+` and with `-`. A row of length `L` starting with `+` fills
//! `⌈L/2⌉` plus boxes and `⌊L/2⌋` minus boxes.
//!
//! The ASCII form lists one token per nonzero (length, sign) pair as
//! `<length><sign>^<multiplicity>`, separated by single spaces, lengths
//! descending and `+` before `-` at equal length: `3+^1 2-^2 1+^1`.
//! The empty diagram prints as the empty string.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::combinat::{
    characters_of_order, gcd, partitions_of, transpose, CyclicCharacter, Partition,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Rows of one length: `plus` of them start with `+`, `minus` with `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub length: u32,
    pub plus: u32,
    pub minus: u32,
}

impl Block {
    pub fn new(length: u32, plus: u32, minus: u32) -> Self {
        Self {
            length,
            plus,
            minus,
        }
    }

    pub fn rows(&self) -> u32 {
        self.plus + self.minus
    }

    /// Contribution of this block to the signature.
    pub fn signature(&self) -> (u32, u32) {
        let up = self.length.div_ceil(2);
        let down = self.length / 2;
        (
            self.plus * up + self.minus * down,
            self.plus * down + self.minus * up,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignedYoungDiagram {
    blocks: Vec<Block>,
}

impl SignedYoungDiagram {
    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self> {
        for b in &blocks {
            if b.length == 0 {
                return Err(Error::InvalidDiagram("row of length zero".into()));
            }
            if b.rows() == 0 {
                return Err(Error::InvalidDiagram(format!(
                    "length {} has no rows",
                    b.length
                )));
            }
        }
        if blocks.windows(2).any(|w| w[0].length <= w[1].length) {
            return Err(Error::InvalidDiagram(
                "block lengths must be strictly decreasing".into(),
            ));
        }
        Ok(Self { blocks })
    }

    /// Builds the normal form from individual signed rows in any order.
    pub fn from_rows<I: IntoIterator<Item = (u32, Sign)>>(rows: I) -> Result<Self> {
        let mut blocks: Vec<Block> = Vec::new();
        for (length, sign) in rows {
            if length == 0 {
                return Err(Error::InvalidDiagram("row of length zero".into()));
            }
            let pos = blocks.iter().position(|b| b.length == length);
            let block = match pos {
                Some(i) => &mut blocks[i],
                None => {
                    blocks.push(Block::new(length, 0, 0));
                    blocks.last_mut().unwrap()
                }
            };
            match sign {
                Sign::Plus => block.plus += 1,
                Sign::Minus => block.minus += 1,
            }
        }
        blocks.sort_by_key(|b| std::cmp::Reverse(b.length));
        Ok(Self { blocks })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.blocks.iter().map(|b| b.length * b.rows()).sum()
    }

    pub fn signature(&self) -> (u32, u32) {
        self.blocks.iter().fold((0, 0), |(p, q), b| {
            let (bp, bq) = b.signature();
            (p + bp, q + bq)
        })
    }

    /// Individual rows, longest first, `+` rows before `-` rows of equal length.
    pub fn rows(&self) -> Vec<(u32, Sign)> {
        let mut out = Vec::new();
        for b in &self.blocks {
            out.extend(std::iter::repeat_n((b.length, Sign::Plus), b.plus as usize));
            out.extend(std::iter::repeat_n(
                (b.length, Sign::Minus),
                b.minus as usize,
            ));
        }
        out
    }

    /// The underlying unsigned partition.
    pub fn partition(&self) -> Partition {
        Partition::new(self.rows().into_iter().map(|(l, _)| l).collect())
            .expect("block normal form yields a partition")
    }

    /// Merges the rows of two diagrams by length.
    pub fn union(&self, other: &SignedYoungDiagram) -> SignedYoungDiagram {
        SignedYoungDiagram::from_rows(self.rows().into_iter().chain(other.rows()))
            .expect("rows of valid diagrams")
    }

    /// `gcd` of the distinct row lengths: the order of the component group
    /// `A_K(O_λ) ≅ Z/d_λ`. Returns 0 for the empty diagram.
    pub fn d_lambda(&self) -> u32 {
        self.blocks.iter().fold(0, |g, b| gcd(g, b.length))
    }

    /// Every row length carries a single sign.
    pub fn is_richardson(&self) -> bool {
        self.blocks.iter().all(|b| b.plus == 0 || b.minus == 0)
    }

    fn plus_vector(&self) -> impl Iterator<Item = u32> + '_ {
        self.blocks.iter().map(|b| b.plus)
    }
}

/// Canonical order: by unsigned partition (lexicographically larger first),
/// then by the `+` multiplicities block by block (larger first).
impl Ord for SignedYoungDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.partition()
            .cmp(&other.partition())
            .then_with(|| other.plus_vector().cmp(self.plus_vector()))
    }
}

impl PartialOrd for SignedYoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in &self.blocks {
            for (sign, mult) in [(Sign::Plus, b.plus), (Sign::Minus, b.minus)] {
                if mult == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}{}^{}", b.length, sign, mult)?;
            }
        }
        Ok(())
    }
}

impl FromStr for SignedYoungDiagram {
    type Err = Error;

    /// Strict inverse of `Display`: anything `Display` would not print is
    /// rejected, with the 1-based column of the offending character.
    fn from_str(s: &str) -> Result<Self> {
        let err = |column: usize, message: &str| Error::Parse {
            column,
            message: message.to_string(),
        };
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let mut tokens: Vec<(u32, Sign, u32)> = Vec::new();

        let number = |pos: &mut usize, what: &str| -> Result<u32> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if start == *pos {
                return Err(err(start + 1, &format!("expected {what}")));
            }
            if bytes[start] == b'0' {
                return Err(err(
                    start + 1,
                    &format!("{what} must be positive without leading zeros"),
                ));
            }
            s[start..*pos]
                .parse::<u32>()
                .map_err(|_| err(start + 1, &format!("{what} out of range")))
        };

        loop {
            let token_start = pos;
            let length = number(&mut pos, "row length")?;
            let sign = match bytes.get(pos) {
                Some(b'+') => Sign::Plus,
                Some(b'-') => Sign::Minus,
                _ => return Err(err(pos + 1, "expected '+' or '-'")),
            };
            pos += 1;
            if bytes.get(pos) != Some(&b'^') {
                return Err(err(pos + 1, "expected '^'"));
            }
            pos += 1;
            let mult = number(&mut pos, "multiplicity")?;
            if let Some(&(prev_len, prev_sign, _)) = tokens.last() {
                let in_order = prev_len > length
                    || (prev_len == length && prev_sign == Sign::Plus && sign == Sign::Minus);
                if !in_order {
                    return Err(err(
                        token_start + 1,
                        "tokens must be in descending length with '+' before '-'",
                    ));
                }
            }
            tokens.push((length, sign, mult));
            match bytes.get(pos) {
                None => break,
                Some(b' ') => {
                    pos += 1;
                    if pos == bytes.len() {
                        return Err(err(pos + 1, "trailing space"));
                    }
                }
                Some(_) => return Err(err(pos + 1, "expected ' ' between tokens")),
            }
        }

        let mut blocks: Vec<Block> = Vec::new();
        for (length, sign, mult) in tokens {
            if blocks.last().map(|b| b.length) != Some(length) {
                blocks.push(Block::new(length, 0, 0));
            }
            let b = blocks.last_mut().unwrap();
            match sign {
                Sign::Plus => b.plus = mult,
                Sign::Minus => b.minus = mult,
            }
        }
        Self::from_blocks(blocks)
    }
}

/// The pair `(SL_n, S(GL_p × GL_q))` with `n = p + q ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairContext {
    p: u32,
    q: u32,
}

impl PairContext {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::InvalidPair { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// `dim k = p² + q² − 1`.
    pub fn dim_k(&self) -> u64 {
        let (p, q) = (self.p as u64, self.q as u64);
        p * p + q * q - 1
    }

    /// `dim g₁ = 2pq`.
    pub fn dim_g1(&self) -> u64 {
        2 * self.p as u64 * self.q as u64
    }

    pub fn check_signature(&self, lambda: &SignedYoungDiagram) -> Result<()> {
        let (found_p, found_q) = lambda.signature();
        if (found_p, found_q) != (self.p, self.q) {
            return Err(Error::SignatureMismatch {
                p: self.p,
                q: self.q,
                found_p,
                found_q,
            });
        }
        Ok(())
    }

    /// All pairs with `1 ≤ p + q ≤ n_max`, ordered by `n`, then by `p`.
    pub fn all_up_to(n_max: u32) -> Vec<PairContext> {
        (1..=n_max)
            .flat_map(|n| (0..=n).rev().map(move |p| PairContext { p, q: n - p }))
            .collect()
    }
}

impl fmt::Display for PairContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// All signed Young diagrams of signature `(p, q)` in canonical order.
/// Unlike [`enumerate_orbits`] this accepts `(0, 0)`, returning the empty diagram.
pub fn diagrams_with_signature(p: u32, q: u32) -> Vec<SignedYoungDiagram> {
    fn choose(
        shape: &[(u32, u32)],
        idx: usize,
        acc: (u32, u32),
        target: (u32, u32),
        blocks: &mut Vec<Block>,
        out: &mut Vec<SignedYoungDiagram>,
    ) {
        if acc.0 > target.0 || acc.1 > target.1 {
            return;
        }
        if idx == shape.len() {
            if acc == target {
                out.push(SignedYoungDiagram {
                    blocks: blocks.clone(),
                });
            }
            return;
        }
        let (length, count) = shape[idx];
        for plus in (0..=count).rev() {
            let b = Block::new(length, plus, count - plus);
            let (bp, bq) = b.signature();
            blocks.push(b);
            choose(
                shape,
                idx + 1,
                (acc.0 + bp, acc.1 + bq),
                target,
                blocks,
                out,
            );
            blocks.pop();
        }
    }

    let mut out = Vec::new();
    for partition in partitions_of(p + q) {
        let mut shape: Vec<(u32, u32)> = Vec::new();
        for &part in partition.parts() {
            match shape.last_mut() {
                Some((l, c)) if *l == part => *c += 1,
                _ => shape.push((part, 1)),
            }
        }
        choose(&shape, 0, (0, 0), (p, q), &mut Vec::new(), &mut out);
    }
    out
}

/// The nilpotent K-orbits in `N₁`, as signed Young diagrams of signature `(p, q)`.
pub fn enumerate_orbits(ctx: PairContext) -> Vec<SignedYoungDiagram> {
    diagrams_with_signature(ctx.p, ctx.q)
}

pub fn d_lambda(lambda: &SignedYoungDiagram) -> u32 {
    lambda.d_lambda()
}

pub fn is_richardson(lambda: &SignedYoungDiagram) -> bool {
    lambda.is_richardson()
}

/// Complex dimension of `O_λ`: half the dimension of the `GL_n`-orbit of the
/// underlying partition, `(n² − Σ_j t_j²) / 2` with `t` the transposed partition.
pub fn orbit_dimension(lambda: &SignedYoungDiagram, ctx: PairContext) -> Result<u64> {
    ctx.check_signature(lambda)?;
    let n = ctx.n() as u64;
    let columns: u64 = transpose(&lambda.partition())
        .parts()
        .iter()
        .map(|&t| (t as u64) * (t as u64))
        .sum();
    Ok((n * n - columns) / 2)
}

/// The characters of `A_K(O_λ) ≅ Z/d_λ` of order `m`.
pub fn component_character_set(lambda: &SignedYoungDiagram, m: u32) -> Vec<CyclicCharacter> {
    characters_of_order(lambda.d_lambda(), m)
}
