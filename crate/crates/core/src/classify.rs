//! Orbital complexes, character-sheaf labels and the Fourier bijection.
//!
//! Both sides are split by central character order `m`:
//!
//! * orbital complexes of order `m` are pairs `(λ, χ)` with `χ` a character
//!   of `A_K(O_λ) ≅ Z/d_λ` of order `m`;
//! * for odd `m`, character sheaves are labelled by a stratum `(m, l, μ)`
//!   from [`cs_orbits`], a partition `τ ⊢ l`, and an order-`m` character of
//!   `Z/ď`; for even `m = 2k` they sit on the stratum `(k, n/2k, ∅)` and are
//!   labelled by a bipartition `ρ` of `n/2k` and a primitive character of
//!   `Z/2k`.
//!
//! # Character matching
//!
//! An order-`m` character of a cyclic group `Z/d` is written `ζ_d ↦ ζ_d^{(d/m)u}`
//! with `u ∈ (Z/m)^×`. The bijection keeps `u`: under the surjections
//! `Z/n → Z/d_λ` and `Z/n → Z/ď` sending generator to generator, the two
//! characters then pull back to the same central character of `Z/n`. Only
//! order preservation and bijectivity are intrinsic; the exponent pairing is
//! a convention fixed by this choice of generators.

use std::fmt;

use crate::combinat::{
    bipartitions_of, characters_of_order, partitions_of, Bipartition, CyclicCharacter, Partition,
};
use crate::error::{Error, Result};
use crate::orbits::{enumerate_orbits, Block, PairContext, Sign, SignedYoungDiagram};
use crate::strata::{cs_orbits, pi1_data, DualStratumLabel};

/// `IC(O_λ, E_χ)`: an orbit with a character of its component group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitalComplex {
    orbit: SignedYoungDiagram,
    character: CyclicCharacter,
}

impl OrbitalComplex {
    pub fn new(orbit: SignedYoungDiagram, character: CyclicCharacter) -> Result<Self> {
        if orbit.is_empty() {
            return Err(Error::InvalidDiagram(
                "orbital complex on the empty diagram".into(),
            ));
        }
        if character.modulus() != orbit.d_lambda() {
            return Err(Error::InvalidCharacter {
                modulus: character.modulus(),
                exponent: character.exponent(),
            });
        }
        Ok(Self { orbit, character })
    }

    pub fn orbit(&self) -> &SignedYoungDiagram {
        &self.orbit
    }

    pub fn character(&self) -> CyclicCharacter {
        self.character
    }

    pub fn central_order(&self) -> u32 {
        self.character.order()
    }
}

impl fmt::Display for OrbitalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IC({}, {})", self.orbit, self.character)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharacterSheafLabel {
    /// `IC(Ǒ_{m^l_+ m^l_- ⊔ μ}, T_{τ,ψ})`, `m` odd, `ψ` of order `m` on `Z/ď`.
    Odd {
        stratum: DualStratumLabel,
        tau: Partition,
        psi: CyclicCharacter,
    },
    /// `IC(Ǒ_{k^l_+ k^l_-}, T_{ρ,ψ})`, `ψ` of order `2k` on `Z/2k`.
    Even {
        stratum: DualStratumLabel,
        rho: Bipartition,
        psi: CyclicCharacter,
    },
}

impl CharacterSheafLabel {
    pub fn stratum(&self) -> &DualStratumLabel {
        match self {
            Self::Odd { stratum, .. } | Self::Even { stratum, .. } => stratum,
        }
    }

    pub fn psi(&self) -> CyclicCharacter {
        match self {
            Self::Odd { psi, .. } | Self::Even { psi, .. } => *psi,
        }
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, Self::Odd { .. })
    }

    /// Order of the central character: `m` for odd labels, `2k` for even ones.
    pub fn central_order(&self) -> u32 {
        match self {
            Self::Odd { stratum, .. } => stratum.m(),
            Self::Even { stratum, .. } => 2 * stratum.m(),
        }
    }

    /// Odd labels on `l = 0` strata; these are the sheaves supported on the
    /// nilpotent cone.
    pub fn is_nilpotent_support(&self) -> bool {
        matches!(self, Self::Odd { stratum, .. } if stratum.l() == 0)
    }

    pub fn validate(&self, ctx: PairContext) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSheaf(msg));
        let stratum = self.stratum();
        stratum.validate(ctx)?;
        let psi = self.psi();
        match self {
            Self::Odd { tau, .. } => {
                let m = stratum.m();
                if m.is_multiple_of(2) {
                    return bad(format!("odd-type label with even m = {m}"));
                }
                if tau.size() != stratum.l() {
                    return bad(format!("|τ| = {} but l = {}", tau.size(), stratum.l()));
                }
                let d_check = pi1_data(stratum).cyclic_modulus;
                if psi.modulus() != d_check || psi.order() != m {
                    return bad(format!(
                        "ψ = {psi} is not an order-{m} character of Z/{d_check}"
                    ));
                }
            }
            Self::Even { rho, .. } => {
                let k = stratum.m();
                if stratum.mu().is_some() {
                    return bad("even-type label needs μ = ∅".into());
                }
                if rho.size() != stratum.l() {
                    return bad(format!("|ρ| = {} but l = {}", rho.size(), stratum.l()));
                }
                if psi.modulus() != 2 * k || psi.order() != 2 * k {
                    return bad(format!(
                        "ψ = {psi} is not a primitive character of Z/{}",
                        2 * k
                    ));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CharacterSheafLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Odd { stratum, tau, psi } => write!(f, "odd {stratum} τ={tau} ψ={psi}"),
            Self::Even { stratum, rho, psi } => write!(f, "even {stratum} ρ={rho} ψ={psi}"),
        }
    }
}

/// Orbital complexes with central character of order `m`.
pub fn orbital_complexes(ctx: PairContext, m: u32) -> Vec<OrbitalComplex> {
    enumerate_orbits(ctx)
        .into_iter()
        .flat_map(|orbit| {
            characters_of_order(orbit.d_lambda(), m)
                .into_iter()
                .map(move |character| OrbitalComplex {
                    orbit: orbit.clone(),
                    character,
                })
        })
        .collect()
}

/// All orbital complexes, by increasing central order.
pub fn all_orbital_complexes(ctx: PairContext) -> Vec<OrbitalComplex> {
    (1..=ctx.n())
        .flat_map(|m| orbital_complexes(ctx, m))
        .collect()
}

/// Character sheaves with central character of order `m`.
pub fn character_sheaves(ctx: PairContext, m: u32) -> Vec<CharacterSheafLabel> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    if m % 2 == 1 {
        for stratum in cs_orbits(ctx).into_iter().filter(|s| s.m() == m) {
            let chars = characters_of_order(pi1_data(&stratum).cyclic_modulus, m);
            for tau in partitions_of(stratum.l()) {
                for &psi in &chars {
                    out.push(CharacterSheafLabel::Odd {
                        stratum: stratum.clone(),
                        tau: tau.clone(),
                        psi,
                    });
                }
            }
        }
    } else {
        if ctx.p() != ctx.q() || !ctx.n().is_multiple_of(m) {
            return out;
        }
        let k = m / 2;
        let l = ctx.n() / m;
        let stratum = DualStratumLabel::new(k, l, None).expect("l ≥ 1");
        let chars = characters_of_order(m, m);
        for rho in bipartitions_of(l) {
            for &psi in &chars {
                out.push(CharacterSheafLabel::Even {
                    stratum: stratum.clone(),
                    rho: rho.clone(),
                    psi,
                });
            }
        }
    }
    out
}

/// All character sheaves, by increasing central order.
pub fn all_character_sheaves(ctx: PairContext) -> Vec<CharacterSheafLabel> {
    (1..=ctx.n())
        .flat_map(|m| character_sheaves(ctx, m))
        .collect()
}

/// The Fourier transform on labels.
pub fn fourier_forward(c: &OrbitalComplex) -> CharacterSheafLabel {
    let m = c.central_order();
    let unit = c.character.unit();
    if m % 2 == 1 {
        let mut tau = Vec::new();
        let mut mu_blocks = Vec::new();
        let mut l = 0;
        for b in c.orbit.blocks() {
            let d = b.length / m;
            let paired = b.plus.min(b.minus);
            tau.extend(std::iter::repeat_n(d, paired as usize));
            l += d * paired;
            if b.rows() > 2 * paired {
                mu_blocks.push(Block::new(b.length, b.plus - paired, b.minus - paired));
            }
        }
        let mu = (!mu_blocks.is_empty()).then(|| {
            SignedYoungDiagram::from_blocks(mu_blocks).expect("sub-blocks of a valid diagram")
        });
        let stratum = DualStratumLabel::new(m, l, mu).expect("orbit is nonempty");
        let d_check = pi1_data(&stratum).cyclic_modulus;
        CharacterSheafLabel::Odd {
            stratum,
            tau: Partition::new(tau).expect("block lengths decrease"),
            psi: CyclicCharacter::from_unit(d_check, m, unit).expect("m divides ď"),
        }
    } else {
        let parts = |sign: Sign| {
            let v = c
                .orbit
                .blocks()
                .iter()
                .flat_map(|b| {
                    let mult = if sign == Sign::Plus { b.plus } else { b.minus };
                    std::iter::repeat_n(b.length / m, mult as usize)
                })
                .collect();
            Partition::new(v).expect("block lengths decrease")
        };
        let l = c.orbit.size() / m;
        CharacterSheafLabel::Even {
            stratum: DualStratumLabel::new(m / 2, l, None).expect("l ≥ 1"),
            rho: Bipartition::new(parts(Sign::Plus), parts(Sign::Minus)),
            psi: CyclicCharacter::from_unit(m, m, unit).expect("primitive"),
        }
    }
}

/// Inverse of [`fourier_forward`].
pub fn fourier_inverse(s: &CharacterSheafLabel, ctx: PairContext) -> Result<OrbitalComplex> {
    s.validate(ctx)?;
    let m = s.central_order();
    let rows: Vec<(u32, Sign)> = match s {
        CharacterSheafLabel::Odd { stratum, tau, .. } => {
            let mut rows = stratum.mu().map(|mu| mu.rows()).unwrap_or_default();
            for &t in tau.parts() {
                rows.push((m * t, Sign::Plus));
                rows.push((m * t, Sign::Minus));
            }
            rows
        }
        CharacterSheafLabel::Even { rho, .. } => rho
            .first
            .parts()
            .iter()
            .map(|&a| (m * a, Sign::Plus))
            .chain(rho.second.parts().iter().map(|&b| (m * b, Sign::Minus)))
            .collect(),
    };
    let orbit = SignedYoungDiagram::from_rows(rows)?;
    ctx.check_signature(&orbit)?;
    let character = CyclicCharacter::from_unit(orbit.d_lambda(), m, s.psi().unit())?;
    OrbitalComplex::new(orbit, character)
}

/// Richardson orbits with characters of odd order.
pub fn nilpotent_support_sheaves(ctx: PairContext) -> Vec<(SignedYoungDiagram, CyclicCharacter)> {
    let mut out = Vec::new();
    for orbit in enumerate_orbits(ctx)
        .into_iter()
        .filter(|o| o.is_richardson())
    {
        let d = orbit.d_lambda();
        for exponent in 0..d {
            let chi = CyclicCharacter::new(d, exponent).expect("exponent < d");
            if chi.order() % 2 == 1 {
                out.push((orbit.clone(), chi));
            }
        }
    }
    out
}

/// The cuspidal character sheaves. Empty unless `|p − q| ≤ 1`.
///
/// * `|p − q| = 1`: the orbit `n_ε` (`ε` the sign of `p − q`) with its
///   primitive characters, recorded as odd labels on the stratum `(n, 0, n_ε)`.
/// * `p = q`: even labels on `(n/2, 1, ∅)` with primitive `ψ` of `Z/n`, and,
///   when `n/2` is odd, odd labels on the same stratum with `τ = (1)` and `ψ`
///   of order `n/2`.
pub fn cuspidal_sheaves(ctx: PairContext) -> Vec<CharacterSheafLabel> {
    let (p, q, n) = (ctx.p(), ctx.q(), ctx.n());
    let mut out = Vec::new();
    if p.abs_diff(q) == 1 {
        let sign = if p > q { Sign::Plus } else { Sign::Minus };
        let orbit = SignedYoungDiagram::from_rows([(n, sign)]).expect("one row");
        let stratum = DualStratumLabel::new(n, 0, Some(orbit)).expect("μ nonempty");
        for psi in characters_of_order(n, n) {
            out.push(CharacterSheafLabel::Odd {
                stratum: stratum.clone(),
                tau: Partition::empty(),
                psi,
            });
        }
    } else if p == q {
        let k = n / 2;
        let stratum = DualStratumLabel::new(k, 1, None).expect("l = 1");
        for rho in bipartitions_of(1) {
            for psi in characters_of_order(n, n) {
                out.push(CharacterSheafLabel::Even {
                    stratum: stratum.clone(),
                    rho: rho.clone(),
                    psi,
                });
            }
        }
        if k % 2 == 1 {
            for psi in characters_of_order(n, k) {
                out.push(CharacterSheafLabel::Odd {
                    stratum: stratum.clone(),
                    tau: Partition::new(vec![1]).expect("(1)"),
                    psi,
                });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeviKind {
    /// Alternating sign blocks `S(GL_{m l_1} × ⋯ × GL_{m l_j})` built from a
    /// Richardson diagram.
    SignBlocks,
    /// `S(GL_{2m}^l)` with `θ`-blocks `(m, m)`, for `μ = ∅`, `l > 1`.
    PairedBlocks,
    /// `S(GL_{2ml} × GL_{n−2ml})`, for `l > 0`, `μ ≠ ∅`.
    StratumTimesOrbit,
    /// `S(GL_m × GL_{m(s−1)})` for `μ = m^s_δ`, `s ≥ 2`, where the sign-block
    /// construction degenerates to the whole group.
    SplitRow,
}

impl LeviKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LeviKind::SignBlocks => "sign-blocks",
            LeviKind::PairedBlocks => "paired-blocks",
            LeviKind::StratumTimesOrbit => "stratum-times-orbit",
            LeviKind::SplitRow => "split-row",
        }
    }
}

/// Combinatorial data of a `θ`-stable Levi `L` and the source of an induction.
///
/// `block_sizes[a] = m · l_sequence[a]`; `theta_blocks[a]` splits block `a`
/// into its `V⁺` and `V⁻` parts; `source_orbits[a]` is the factor of the
/// source orbit (or stratum) living on block `a`. `signs` is filled only for
/// [`LeviKind::SignBlocks`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeviDatum {
    pub kind: LeviKind,
    pub m: u32,
    pub block_sizes: Vec<u32>,
    pub theta_blocks: Vec<(u32, u32)>,
    pub source_orbits: Vec<SignedYoungDiagram>,
    pub signs: Vec<Sign>,
    pub l_sequence: Vec<u32>,
}

impl LeviDatum {
    /// `L = G`: the construction gives no proper parabolic.
    pub fn is_whole_group(&self) -> bool {
        self.block_sizes.len() == 1
    }

    /// Checks the bookkeeping laws against the pair and the diagram the datum
    /// was built for (for strata, the merged diagram).
    pub fn check_laws(&self, ctx: PairContext, lambda: &SignedYoungDiagram) -> Result<(), String> {
        let n: u32 = self.block_sizes.iter().sum();
        if n != ctx.n() {
            return Err(format!("block sizes sum to {n}, expected {}", ctx.n()));
        }
        let lens = [
            self.theta_blocks.len(),
            self.source_orbits.len(),
            self.l_sequence.len(),
        ];
        if lens.iter().any(|&x| x != self.block_sizes.len()) {
            return Err("sequence lengths disagree".into());
        }
        for (a, &size) in self.block_sizes.iter().enumerate() {
            if size != self.m * self.l_sequence[a] {
                return Err(format!("block {a}: size {size} ≠ m·l_a"));
            }
            let (tp, tq) = self.theta_blocks[a];
            if tp + tq != size {
                return Err(format!(
                    "block {a}: θ-split ({tp},{tq}) does not fill {size}"
                ));
            }
            if self.source_orbits[a].signature() != (tp, tq) {
                return Err(format!(
                    "block {a}: source {} does not have signature ({tp},{tq})",
                    self.source_orbits[a]
                ));
            }
        }
        let theta: (u32, u32) = self
            .theta_blocks
            .iter()
            .fold((0, 0), |acc, &(a, b)| (acc.0 + a, acc.1 + b));
        if theta != (ctx.p(), ctx.q()) {
            return Err(format!(
                "θ-blocks sum to {theta:?}, expected ({}, {})",
                ctx.p(),
                ctx.q()
            ));
        }
        let rows: u32 = lambda.size() / self.m;
        if self.l_sequence.iter().sum::<u32>() != rows {
            return Err(format!("Σ l_a ≠ Σ λ_j / m = {rows}"));
        }
        if self.kind == LeviKind::SignBlocks {
            if self.signs.len() != self.block_sizes.len() {
                return Err("one sign per block expected".into());
            }
            if self.signs.windows(2).any(|w| w[0] == w[1]) {
                return Err("signs do not alternate".into());
            }
        }
        Ok(())
    }
}

fn single_row_block(length: u32, mult: u32, sign: Sign) -> SignedYoungDiagram {
    let b = match sign {
        Sign::Plus => Block::new(length, mult, 0),
        Sign::Minus => Block::new(length, 0, mult),
    };
    SignedYoungDiagram::from_blocks(vec![b]).expect("positive length and multiplicity")
}

/// `θ`-split of a block of `m · l` carrying `l` rows of length `m` and sign `ε`.
fn odd_row_split(m: u32, l: u32, sign: Sign) -> (u32, u32) {
    let k = (m - 1) / 2;
    match sign {
        Sign::Plus => ((k + 1) * l, k * l),
        Sign::Minus => (k * l, (k + 1) * l),
    }
}

/// The sign-block Levi for `IC(O_λ, E_φ)` with `φ` of odd order `m`, `λ`
/// Richardson with every row length divisible by `m`.
///
/// Writing the rows of `λ` as `m·λ_1 ≥ ⋯ ≥ m·λ_s` with signs `δ_i`, the
/// sequence `l_1 < ⋯ < l_{j₀} = s` marks where the sign changes; the rest of
/// the sequence is the transpose of `λ − (l_{j₀}, …, l_1)^t`. Signs alternate
/// starting at `δ_1`, and block `a` carries the orbit `m^{l_a}_{ε_a}`.
pub fn levi_for_nilpotent_support(lambda: &SignedYoungDiagram, m: u32) -> Result<LeviDatum> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::InvalidLabel(format!("m = {m} must be odd")));
    }
    if lambda.is_empty() {
        return Err(Error::InvalidDiagram("empty diagram".into()));
    }
    if !lambda.is_richardson() {
        return Err(Error::NotRichardson(lambda.to_string()));
    }
    if !lambda.d_lambda().is_multiple_of(m) {
        return Err(Error::NotDivisible {
            m,
            diagram: lambda.to_string(),
        });
    }
    let rows: Vec<(u32, Sign)> = lambda
        .rows()
        .into_iter()
        .map(|(len, s)| (len / m, s))
        .collect();
    let s = rows.len();

    let mut l_sequence: Vec<u32> = (0..s)
        .filter(|&i| i + 1 == s || rows[i].1 != rows[i + 1].1)
        .map(|i| i as u32 + 1)
        .collect();
    let head = crate::combinat::transpose(
        &Partition::new(l_sequence.iter().rev().copied().collect()).expect("endpoints increase"),
    );
    let remainder: Vec<u32> = rows
        .iter()
        .zip(head.parts())
        .map(|(&(len, _), &h)| len - h)
        .collect();
    let tail = crate::combinat::transpose(&Partition::from_unsorted(remainder));
    l_sequence.extend_from_slice(tail.parts());
    debug_assert_eq!(l_sequence.len() as u32, rows[0].0);

    let mut signs = Vec::with_capacity(l_sequence.len());
    let mut sign = rows[0].1;
    for _ in &l_sequence {
        signs.push(sign);
        sign = sign.flip();
    }

    Ok(LeviDatum {
        kind: LeviKind::SignBlocks,
        m,
        block_sizes: l_sequence.iter().map(|&l| m * l).collect(),
        theta_blocks: l_sequence
            .iter()
            .zip(&signs)
            .map(|(&l, &e)| odd_row_split(m, l, e))
            .collect(),
        source_orbits: l_sequence
            .iter()
            .zip(&signs)
            .map(|(&l, &e)| single_row_block(m, l, e))
            .collect(),
        signs,
        l_sequence,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Induction {
    Induced(LeviDatum),
    NotInduced,
}

/// A proper `θ`-stable Levi from which `s` is induced, or
/// [`Induction::NotInduced`] when no construction applies.
pub fn induction_datum_for_sheaf(s: &CharacterSheafLabel, ctx: PairContext) -> Result<Induction> {
    s.validate(ctx)?;
    let stratum = s.stratum();
    let (m, l) = (stratum.m(), stratum.l());
    let datum = match stratum.mu() {
        None if l == 1 => return Ok(Induction::NotInduced),
        None => LeviDatum {
            kind: LeviKind::PairedBlocks,
            m,
            block_sizes: vec![2 * m; l as usize],
            theta_blocks: vec![(m, m); l as usize],
            source_orbits: vec![
                SignedYoungDiagram::from_blocks(vec![Block::new(m, 1, 1)])
                    .expect("m ≥ 1");
                l as usize
            ],
            signs: Vec::new(),
            l_sequence: vec![2; l as usize],
        },
        Some(mu) if l > 0 => {
            let ml = m * l;
            LeviDatum {
                kind: LeviKind::StratumTimesOrbit,
                m,
                block_sizes: vec![2 * ml, ctx.n() - 2 * ml],
                theta_blocks: vec![(ml, ml), (ctx.p() - ml, ctx.q() - ml)],
                source_orbits: vec![
                    SignedYoungDiagram::from_blocks(vec![Block::new(m, l, l)]).expect("m, l ≥ 1"),
                    mu.clone(),
                ],
                signs: Vec::new(),
                l_sequence: vec![2 * l, mu.size() / m],
            }
        }
        Some(mu) => {
            let levi = levi_for_nilpotent_support(mu, m)?;
            if !levi.is_whole_group() {
                return Ok(Induction::Induced(levi));
            }
            // μ = m^s_δ
            let sign = levi.signs[0];
            let rows = mu.rows().len() as u32;
            if rows == 1 {
                return Ok(Induction::NotInduced);
            }
            LeviDatum {
                kind: LeviKind::SplitRow,
                m,
                block_sizes: vec![m, m * (rows - 1)],
                theta_blocks: vec![odd_row_split(m, 1, sign), odd_row_split(m, rows - 1, sign)],
                source_orbits: vec![
                    single_row_block(m, 1, sign),
                    single_row_block(m, rows - 1, sign),
                ],
                signs: Vec::new(),
                l_sequence: vec![1, rows - 1],
            }
        }
    };
    Ok(Induction::Induced(datum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::euler_phi;
    use std::collections::HashSet;

    fn syd(s: &str) -> SignedYoungDiagram {
        s.parse().unwrap()
    }

    fn ctx(p: u32, q: u32) -> PairContext {
        PairContext::new(p, q).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn complex(orbit: &str, order: u32) -> OrbitalComplex {
        let orbit = syd(orbit);
        let chi = characters_of_order(orbit.d_lambda(), order)[0];
        OrbitalComplex::new(orbit, chi).unwrap()
    }

    #[test]
    fn orbital_complex_examples() {
        let c = orbital_complexes(ctx(2, 1), 3);
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|x| x.orbit() == &syd("3+^1")));
        assert_eq!(orbital_complexes(ctx(2, 1), 1).len(), 4);
        assert!(orbital_complexes(ctx(2, 1), 2).is_empty());
    }

    #[test]
    fn character_sheaf_examples() {
        let even2 = character_sheaves(ctx(2, 2), 2);
        assert_eq!(even2.len(), 5);
        assert!(even2
            .iter()
            .all(|s| s.psi().order() == 2 && s.stratum().l() == 2));
        assert_eq!(character_sheaves(ctx(2, 2), 4).len(), 4);
        let odd3 = character_sheaves(ctx(2, 1), 3);
        assert_eq!(odd3.len(), 2);
        for s in &odd3 {
            assert_eq!(
                s.stratum(),
                &DualStratumLabel::new(3, 0, Some(syd("3+^1"))).unwrap()
            );
        }
    }

    #[test]
    fn forward_examples() {
        let s = fourier_forward(&complex("1+^2 1-^1", 1));
        assert_eq!(
            s,
            CharacterSheafLabel::Odd {
                stratum: DualStratumLabel::new(1, 1, Some(syd("1+^1"))).unwrap(),
                tau: part(&[1]),
                psi: CyclicCharacter::trivial(1).unwrap(),
            }
        );

        let s = fourier_forward(&complex("4+^1", 2));
        match &s {
            CharacterSheafLabel::Even { stratum, rho, psi } => {
                assert_eq!((stratum.m(), stratum.l()), (1, 2));
                assert_eq!(rho, &Bipartition::new(part(&[2]), Partition::empty()));
                assert_eq!(psi.order(), 2);
            }
            _ => panic!("expected even type, got {s}"),
        }

        let s = fourier_forward(&complex("3+^1", 3));
        match &s {
            CharacterSheafLabel::Odd { stratum, tau, psi } => {
                assert_eq!(
                    stratum,
                    &DualStratumLabel::new(3, 0, Some(syd("3+^1"))).unwrap()
                );
                assert!(tau.is_empty());
                assert_eq!(psi.order(), 3);
            }
            _ => panic!("expected odd type, got {s}"),
        }
    }

    #[test]
    fn inverse_examples() {
        let odd = CharacterSheafLabel::Odd {
            stratum: DualStratumLabel::new(1, 1, Some(syd("1+^1"))).unwrap(),
            tau: part(&[1]),
            psi: CyclicCharacter::trivial(1).unwrap(),
        };
        assert_eq!(
            fourier_inverse(&odd, ctx(2, 1)).unwrap().orbit(),
            &syd("1+^2 1-^1")
        );

        let psi = CyclicCharacter::new(2, 1).unwrap();
        let stratum = DualStratumLabel::new(1, 2, None).unwrap();
        let even = |first: &[u32], second: &[u32]| CharacterSheafLabel::Even {
            stratum: stratum.clone(),
            rho: Bipartition::new(part(first), part(second)),
            psi,
        };
        assert_eq!(
            fourier_inverse(&even(&[1], &[1]), ctx(2, 2))
                .unwrap()
                .orbit(),
            &syd("2+^1 2-^1")
        );
        assert_eq!(
            fourier_inverse(&even(&[1, 1], &[]), ctx(2, 2))
                .unwrap()
                .orbit(),
            &syd("2+^2")
        );
        assert!(fourier_inverse(&even(&[1], &[1]), ctx(3, 1)).is_err());
    }

    #[test]
    fn bijection_and_counts_through_n_8() {
        for c in PairContext::all_up_to(8) {
            let mut total = 0usize;
            for m in 1..=c.n() {
                let complexes = orbital_complexes(c, m);
                let sheaves = character_sheaves(c, m);
                let with_m = enumerate_orbits(c)
                    .iter()
                    .filter(|o| o.d_lambda() % m == 0)
                    .count();
                assert_eq!(
                    sheaves.len(),
                    with_m * euler_phi(m) as usize,
                    "m={m} at {c}"
                );
                assert_eq!(complexes.len(), sheaves.len());
                let image: HashSet<_> = complexes.iter().map(fourier_forward).collect();
                let target: HashSet<_> = sheaves.iter().cloned().collect();
                assert_eq!(image, target, "m={m} at {c}");
                for x in &complexes {
                    let s = fourier_forward(x);
                    assert_eq!(s.central_order(), m);
                    assert_eq!(&fourier_inverse(&s, c).unwrap(), x);
                }
                total += sheaves.len();
            }
            let sum_d: u32 = enumerate_orbits(c).iter().map(|o| o.d_lambda()).sum();
            assert_eq!(total, sum_d as usize);
        }
    }

    #[test]
    fn two_two_totals() {
        let c = ctx(2, 2);
        let per_m: Vec<usize> = (1..=4).map(|m| character_sheaves(c, m).len()).collect();
        assert_eq!(per_m, vec![10, 5, 0, 4]);
    }

    #[test]
    fn nilpotent_support_examples() {
        let at22 = nilpotent_support_sheaves(ctx(2, 2));
        assert_eq!(at22.len(), 6);
        assert!(at22.iter().all(|(_, chi)| chi.exponent() == 0));
        assert_eq!(nilpotent_support_sheaves(ctx(2, 1)).len(), 5);
        let at11 = nilpotent_support_sheaves(ctx(1, 1));
        assert_eq!(
            at11.iter().map(|(o, _)| o.to_string()).collect::<Vec<_>>(),
            vec!["2+^1", "2-^1"]
        );
    }

    #[test]
    fn cuspidal_examples() {
        let at21 = cuspidal_sheaves(ctx(2, 1));
        assert_eq!(at21.len(), 2);
        for s in &at21 {
            let c = fourier_inverse(s, ctx(2, 1)).unwrap();
            assert_eq!(c.orbit(), &syd("3+^1"));
            assert_eq!(c.central_order(), 3);
        }
        assert_eq!(cuspidal_sheaves(ctx(1, 1)).len(), 3);
        assert_eq!(cuspidal_sheaves(ctx(2, 2)).len(), 4);
        assert_eq!(cuspidal_sheaves(ctx(3, 3)).len(), 6);
        assert!(cuspidal_sheaves(ctx(3, 1)).is_empty());
        assert!(cuspidal_sheaves(ctx(4, 0)).is_empty());
        assert_eq!(
            cuspidal_sheaves(ctx(1, 2))[0].stratum().mu(),
            Some(&syd("3-^1"))
        );
    }

    #[test]
    fn levi_examples() {
        let whole = levi_for_nilpotent_support(&syd("3+^1"), 3).unwrap();
        assert!(whole.is_whole_group());

        let l = levi_for_nilpotent_support(&syd("2+^1 1-^1"), 1).unwrap();
        assert_eq!(l.l_sequence, vec![1, 2]);
        assert_eq!(l.signs, vec![Sign::Plus, Sign::Minus]);
        assert_eq!(l.block_sizes, vec![1, 2]);
        assert_eq!(l.theta_blocks, vec![(1, 0), (0, 2)]);
        assert_eq!(l.source_orbits, vec![syd("1+^1"), syd("1-^2")]);

        let l = levi_for_nilpotent_support(&syd("6+^2"), 3).unwrap();
        assert_eq!(l.l_sequence, vec![2, 2]);
        assert_eq!(l.signs, vec![Sign::Plus, Sign::Minus]);
        assert_eq!(l.block_sizes, vec![6, 6]);
        assert_eq!(l.theta_blocks, vec![(4, 2), (2, 4)]);
        assert_eq!(l.source_orbits, vec![syd("3+^2"), syd("3-^2")]);

        assert!(matches!(
            levi_for_nilpotent_support(&syd("2+^1 2-^1"), 1),
            Err(Error::NotRichardson(_))
        ));
        assert!(matches!(
            levi_for_nilpotent_support(&syd("3+^1 1-^1"), 3),
            Err(Error::NotDivisible { .. })
        ));
        assert!(levi_for_nilpotent_support(&syd("2+^1"), 2).is_err());
    }

    #[test]
    fn levi_laws_hold() {
        for c in PairContext::all_up_to(10) {
            for lambda in enumerate_orbits(c)
                .into_iter()
                .filter(|o| o.is_richardson())
            {
                for m in (1..=lambda.d_lambda())
                    .step_by(2)
                    .filter(|m| lambda.d_lambda() % m == 0)
                {
                    let levi = levi_for_nilpotent_support(&lambda, m).unwrap();
                    levi.check_laws(c, &lambda)
                        .unwrap_or_else(|e| panic!("{lambda}, m={m}: {e}"));
                    let all_ones = lambda.blocks().iter().all(|b| b.length == m);
                    assert_eq!(levi.is_whole_group(), all_ones, "{lambda}, m={m}");
                }
            }
        }
    }

    #[test]
    fn induction_examples() {
        let psi = CyclicCharacter::new(2, 1).unwrap();
        let even = CharacterSheafLabel::Even {
            stratum: DualStratumLabel::new(1, 2, None).unwrap(),
            rho: Bipartition::new(part(&[1]), part(&[1])),
            psi,
        };
        match induction_datum_for_sheaf(&even, ctx(2, 2)).unwrap() {
            Induction::Induced(levi) => {
                assert_eq!(levi.block_sizes, vec![2, 2]);
                assert_eq!(levi.theta_blocks, vec![(1, 1), (1, 1)]);
            }
            Induction::NotInduced => panic!("expected a Levi"),
        }

        let odd = fourier_forward(&complex("1+^2 1-^1", 1));
        match induction_datum_for_sheaf(&odd, ctx(2, 1)).unwrap() {
            Induction::Induced(levi) => assert_eq!(levi.block_sizes, vec![2, 1]),
            Induction::NotInduced => panic!("expected a Levi"),
        }

        let cusp = CharacterSheafLabel::Even {
            stratum: DualStratumLabel::new(1, 1, None).unwrap(),
            rho: Bipartition::new(part(&[1]), Partition::empty()),
            psi,
        };
        assert_eq!(
            induction_datum_for_sheaf(&cusp, ctx(1, 1)).unwrap(),
            Induction::NotInduced
        );
    }

    #[test]
    fn not_induced_exactly_on_cuspidals() {
        for c in PairContext::all_up_to(10) {
            let cusp: HashSet<_> = cuspidal_sheaves(c).into_iter().collect();
            for s in all_character_sheaves(c) {
                let ind = induction_datum_for_sheaf(&s, c).unwrap();
                assert_eq!(
                    ind == Induction::NotInduced,
                    cusp.contains(&s),
                    "{s} at {c}"
                );
                if let Induction::Induced(levi) = ind {
                    assert!(!levi.is_whole_group());
                    levi.check_laws(c, &s.stratum().merged())
                        .unwrap_or_else(|e| panic!("{s} at {c}: {e}"));
                }
            }
        }
    }

    #[test]
    fn degenerate_pair() {
        let c = ctx(3, 0);
        let all = all_character_sheaves(c);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].central_order(), 1);
        assert!(cuspidal_sheaves(c).is_empty());
    }
}
