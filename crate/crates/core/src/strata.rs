//! Dual strata `Ǒ_{m^l_+ m^l_- ⊔ μ}` supporting character sheaves, and the
//! cyclic part of their equivariant fundamental groups.

use std::fmt;

use crate::combinat::gcd;
use crate::error::{Error, Result};
use crate::orbits::{diagrams_with_signature, Block, PairContext, SignedYoungDiagram};

/// Names the stratum dual to the orbit `O_{m^l_+ m^l_- ⊔ μ}`.
///
/// `mu` is `None` for `μ = ∅`; a present `mu` is never the empty diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualStratumLabel {
    m: u32,
    l: u32,
    mu: Option<SignedYoungDiagram>,
}

impl DualStratumLabel {
    pub fn new(m: u32, l: u32, mu: Option<SignedYoungDiagram>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidLabel("m must be positive".into()));
        }
        let mu = mu.filter(|d| !d.is_empty());
        if l == 0 && mu.is_none() {
            return Err(Error::InvalidLabel("l = 0 requires a nonempty μ".into()));
        }
        Ok(Self { m, l, mu })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn mu(&self) -> Option<&SignedYoungDiagram> {
        self.mu.as_ref()
    }

    /// The orbit `m^l_+ m^l_- ⊔ μ` whose dual stratum this label names.
    pub fn merged(&self) -> SignedYoungDiagram {
        stratum_of_orbital_datum(self.m, self.l, self.mu.as_ref())
    }

    /// Checks membership in `cs_orbits(ctx)`.
    pub fn validate(&self, ctx: PairContext) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidLabel(msg));
        let ml = self.m * self.l;
        match &self.mu {
            None => {
                if ctx.p() != ctx.q() || 2 * ml != ctx.n() {
                    return bad(format!(
                        "μ = ∅ needs p = q and 2ml = n, got {self} at {ctx}"
                    ));
                }
            }
            Some(mu) => {
                if self.m.is_multiple_of(2) {
                    return bad(format!("m must be odd when μ ≠ ∅, got {self}"));
                }
                if !mu.is_richardson() {
                    return bad(format!("μ = {mu} is not Richardson"));
                }
                if mu.d_lambda() % self.m != 0 {
                    return bad(format!(
                        "m = {} does not divide d_μ = {}",
                        self.m,
                        mu.d_lambda()
                    ));
                }
                if ml > ctx.p() || ml > ctx.q() || mu.signature() != (ctx.p() - ml, ctx.q() - ml) {
                    return bad(format!(
                        "μ = {mu} has the wrong signature for {self} at {ctx}"
                    ));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for DualStratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mu {
            Some(mu) => write!(f, "(m={}, l={}, μ={})", self.m, self.l, mu),
            None => write!(f, "(m={}, l={}, μ=∅)", self.m, self.l),
        }
    }
}

/// `π₁^K(Ǒ) = B_{W_l} × Z/ďZ`, recorded by the braid rank `l` and `ď`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pi1Data {
    pub braid_rank: u32,
    pub cyclic_modulus: u32,
}

pub fn pi1_data(label: &DualStratumLabel) -> Pi1Data {
    let cyclic_modulus = match (&label.mu, label.l) {
        (None, _) => 2 * label.m,
        (Some(mu), 0) => mu.d_lambda(),
        (Some(mu), _) => gcd(2 * label.m, mu.d_lambda()),
    };
    Pi1Data {
        braid_rank: label.l,
        cyclic_modulus,
    }
}

/// `m^l_+ m^l_- ⊔ μ`: adds `l` rows of length `m` of each sign to `μ`.
pub fn stratum_of_orbital_datum(
    m: u32,
    l: u32,
    mu: Option<&SignedYoungDiagram>,
) -> SignedYoungDiagram {
    let pairs = if l == 0 {
        SignedYoungDiagram::empty()
    } else {
        SignedYoungDiagram::from_blocks(vec![Block::new(m, l, l)]).expect("m, l positive")
    };
    match mu {
        Some(mu) => pairs.union(mu),
        None => pairs,
    }
}

/// The labels of the orbits in `N₁^cs`, ordered by `(m, l)` and then by `μ`.
///
/// Two families:
/// * `m` odd, `μ` Richardson of signature `(p − ml, q − ml)` with `m | d_μ`;
/// * `μ = ∅`, `2ml = n`, any `m ≥ 1`, only when `p = q`.
///
/// For `l = 0` the condition `m | d_μ` is also imposed; without it the
/// family would be infinite, and an `l = 0` label with `m ∤ d_μ` carries no
/// order-`m` character of `Z/d_μ`.
pub fn cs_orbits(ctx: PairContext) -> Vec<DualStratumLabel> {
    let (p, q, n) = (ctx.p(), ctx.q(), ctx.n());
    let mut out = Vec::new();
    for m in 1..=n {
        let l_max = p.min(q) / m;
        for l in 0..=l_max {
            if m % 2 == 1 {
                for mu in diagrams_with_signature(p - m * l, q - m * l) {
                    if mu.is_empty() || !mu.is_richardson() || mu.d_lambda() % m != 0 {
                        continue;
                    }
                    out.push(DualStratumLabel { m, l, mu: Some(mu) });
                }
            }
            if p == q && 2 * m * l == n {
                out.push(DualStratumLabel { m, l, mu: None });
            }
        }
    }
    out
}
