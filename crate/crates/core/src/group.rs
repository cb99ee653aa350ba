//! Finite groups stored as dense multiplication tables.
//!
//! Elements are the indices `0..order`. Every group in this crate is small
//! (order at most 255), so all structural checks are exhaustive.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order accepted by [`FiniteGroup::from_table`].
pub const MAX_ORDER: usize = 255;

/// Associativity is checked on all triples up to this order.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: usize,
    #[serde(rename = "mul_table")]
    mul: Vec<usize>,
    #[serde(skip)]
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table, checking the
    /// group axioms.
    pub fn from_table(name: impl Into<String>, order: usize, mul: Vec<usize>) -> Result<Self> {
        let name = name.into();
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("order {order} outside 1..={MAX_ORDER}")));
        }
        if mul.len() != order * order {
            return Err(Error::InvalidGroup(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidGroup(format!("entry {bad} is not an element")));
        }

        let at = |a: usize, b: usize| mul[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;

        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
            inv.push(y);
        }

        if order <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::InvalidGroup(format!(
                                "({a}*{b})*{c} != {a}*({b}*{c})"
                            )));
                        }
                    }
                }
            }
        }

        Ok(Self { name, order, identity, mul, inv })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `g^n` for `n >= 0`, by repeated squaring.
    pub fn pow(&self, g: usize, mut n: usize) -> usize {
        let mut base = g;
        let mut acc = self.identity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    /// `h g h^-1`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

pub fn is_odd_order(g: &FiniteGroup) -> bool {
    g.order() % 2 == 1
}

/// The cyclic group `Z/n` under addition.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Domain("cyclic group order must be positive".into()));
    }
    let mul = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    FiniteGroup::from_table(format!("C{n}"), n, mul)
}

/// Componentwise product; the pair `(a, b)` has index `a * |h| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (m, n) = (g.order(), h.order());
    let order = m * n;
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        let (xa, xb) = (x / n, x % n);
        for y in 0..order {
            let (ya, yb) = (y / n, y % n);
            mul.push(g.mul(xa, ya) * n + h.mul(xb, yb));
        }
    }
    FiniteGroup::from_table(format!("{}x{}", g.name(), h.name()), order, mul)
}

/// The non-abelian group `C7 ⋊ C3` of order 21.
///
/// Elements are pairs `(a, b)` in `Z7 × Z3` stored at index `a + 7b`, with
/// `(a, b)(a', b') = (a + 2^b a' mod 7, b + b' mod 3)`. The unit 2 has
/// multiplicative order 3 mod 7, so the action is faithful.
pub fn frobenius21() -> FiniteGroup {
    const UNIT_POWERS: [usize; 3] = [1, 2, 4];
    let index = |a: usize, b: usize| a + 7 * b;
    let mut mul = Vec::with_capacity(21 * 21);
    for x in 0..21 {
        let (a, b) = (x % 7, x / 7);
        for y in 0..21 {
            let (a2, b2) = (y % 7, y / 7);
            mul.push(index((a + UNIT_POWERS[b] * a2) % 7, (b + b2) % 3));
        }
    }
    FiniteGroup::from_table("frobenius21", 21, mul).expect("C7 ⋊ C3 table satisfies the group axioms")
}

/// Looks up a named built-in group: `frobenius21`, `C<n>` (cyclic), or a
/// product such as `C3xC3`. Names are case-insensitive.
pub fn builtin_group(name: &str) -> Result<FiniteGroup> {
    let lower = name.trim().to_ascii_lowercase();
    if lower == "frobenius21" || lower == "f21" {
        return Ok(frobenius21());
    }
    let factors: Vec<&str> = lower.split('x').collect();
    let mut groups = Vec::with_capacity(factors.len());
    for f in factors {
        let n: usize = f
            .strip_prefix('c')
            .and_then(|s| s.parse().ok())
            .filter(|n| (1..=MAX_ORDER).contains(n))
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
        groups.push(cyclic_group(n)?);
    }
    let mut iter = groups.into_iter();
    let mut acc = iter.next().ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
    for g in iter {
        if acc.order() * g.order() > MAX_ORDER {
            return Err(Error::UnknownGroup(name.to_string()));
        }
        acc = direct_product(&acc, &g)?;
    }
    Ok(acc)
}

/// The odd-order groups used throughout the test suite.
pub fn builtin_odd_groups() -> Vec<FiniteGroup> {
    let c = |n| cyclic_group(n).expect("positive order");
    vec![
        c(3),
        c(7),
        c(9),
        direct_product(&c(3), &c(3)).expect("small product"),
        frobenius21(),
    ]
}
