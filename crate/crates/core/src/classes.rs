//! Conjugacy classes and the power map on classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Conjugacy classes of a finite group together with the full power map
/// `n ↦ class of g^n`, for `n` in `1..=k` where `k` is the group order.
///
/// Classes are ordered canonically: the identity class first, then by
/// descending element order, ties broken by the smallest element index in
/// the class. Labels follow the usual `1, 7A, 7B, 3A, ...` convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassStructure {
    group_name: String,
    group_order: usize,
    num_classes: usize,
    labels: Vec<String>,
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    sizes: Vec<usize>,
    rep_orders: Vec<usize>,
    /// Row `n - 1` holds the classes of `g^n`.
    power_table: Vec<Vec<usize>>,
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ClassStructure {
    let k = g.order();

    // Orbit partition under conjugation. Scanning elements in index order
    // makes each orbit's first element its smallest index.
    let mut raw_class = vec![usize::MAX; k];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for x in g.elements() {
        if raw_class[x] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        for h in g.elements() {
            let y = g.conjugate(x, h);
            if raw_class[y] == usize::MAX {
                raw_class[y] = id;
                orbit.push(y);
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }

    let mut order_keys: Vec<(usize, usize)> = orbits
        .iter()
        .enumerate()
        .map(|(id, orbit)| (id, g.element_order(orbit[0])))
        .collect();
    order_keys.sort_by(|&(ia, oa), &(ib, ob)| {
        let is_id_a = orbits[ia][0] == g.identity();
        let is_id_b = orbits[ib][0] == g.identity();
        is_id_b
            .cmp(&is_id_a)
            .then(ob.cmp(&oa))
            .then(orbits[ia][0].cmp(&orbits[ib][0]))
    });

    let num_classes = orbits.len();
    let mut relabel = vec![0; num_classes];
    for (new, &(old, _)) in order_keys.iter().enumerate() {
        relabel[old] = new;
    }
    let class_of: Vec<usize> = raw_class.iter().map(|&c| relabel[c]).collect();
    let representatives: Vec<usize> = order_keys.iter().map(|&(old, _)| orbits[old][0]).collect();
    let sizes: Vec<usize> = order_keys.iter().map(|&(old, _)| orbits[old].len()).collect();
    let rep_orders: Vec<usize> = order_keys.iter().map(|&(_, o)| o).collect();

    let mut labels = Vec::with_capacity(num_classes);
    let mut seen_with_order = std::collections::HashMap::<usize, usize>::new();
    for (c, &o) in rep_orders.iter().enumerate() {
        if c == 0 {
            labels.push("1".to_string());
            continue;
        }
        let n = seen_with_order.entry(o).or_insert(0);
        labels.push(format!("{o}{}", suffix(*n)));
        *n += 1;
    }

    let power_table = (1..=k)
        .map(|n| representatives.iter().map(|&r| class_of[g.pow(r, n)]).collect())
        .collect();

    let cs = ClassStructure {
        group_name: g.name().to_string(),
        group_order: k,
        num_classes,
        labels,
        class_of,
        representatives,
        sizes,
        rep_orders,
        power_table,
    };
    debug_assert!(cs.power_map_is_class_function(g));
    cs
}

fn suffix(mut n: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'A' + (n % 26) as u8);
        n /= 26;
        if n == 0 {
            break;
        }
        n -= 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

impl ClassStructure {
    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, c: usize) -> &str {
        &self.labels[c]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn rep_orders(&self) -> &[usize] {
        &self.rep_orders
    }

    pub fn is_odd_order(&self) -> bool {
        self.group_order % 2 == 1
    }

    /// Class of `g^n` for `g` in class `c`. The exponent is reduced mod the
    /// group order; `n ≡ 0` maps to the identity class.
    pub fn power(&self, n: i64, c: usize) -> usize {
        let k = self.group_order as i64;
        let r = n.rem_euclid(k);
        let row = if r == 0 { k } else { r } as usize;
        self.power_table[row - 1][c]
    }

    /// Row of the power table for exponent `n` in `1..=k`.
    pub fn power_row(&self, n: usize) -> &[usize] {
        &self.power_table[n - 1]
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.power(-1, c)
    }

    /// Resolves a class by its label (`"7A"`, `"1"`) or by a 1-based index.
    pub fn class_by_label(&self, label: &str) -> Result<usize> {
        let t = label.trim();
        if let Some(c) = self.labels.iter().position(|l| l.eq_ignore_ascii_case(t)) {
            return Ok(c);
        }
        match t.parse::<usize>() {
            Ok(i) if (1..=self.num_classes).contains(&i) => Ok(i - 1),
            _ => Err(Error::UnknownClass(label.to_string())),
        }
    }

    /// Exhaustively checks that the class of `g^n` depends only on the class
    /// of `g`, for every element and every exponent in `1..=k`.
    pub fn power_map_is_class_function(&self, g: &FiniteGroup) -> bool {
        (1..=self.group_order).all(|n| {
            g.elements()
                .all(|x| self.class_of[g.pow(x, n)] == self.power_table[n - 1][self.class_of[x]])
        })
    }
}
