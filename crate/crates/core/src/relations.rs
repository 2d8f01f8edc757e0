//! The reachability relation `x <= y` iff `a * x = y` for some `a`.

use std::fmt;

use serde::Serialize;

use crate::magma::{ElementSet, Magma};
use crate::properties::PropertyVerdict;

/// Dense boolean matrix; `rows[x]` is the set of `y` with `x <= y`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    order: usize,
    rows: Vec<ElementSet>,
}

impl Relation {
    pub fn from_rows(order: usize, rows: Vec<ElementSet>) -> Self {
        debug_assert_eq!(rows.len(), order);
        Relation { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// The relation on `members`, relabelled to `0..|members|` in
    /// increasing order.
    pub fn restrict(&self, members: ElementSet) -> Relation {
        let members = members.to_vec();
        let rows = members
            .iter()
            .map(|&x| {
                ElementSet::from_elements(
                    members.iter().enumerate().filter(|&(_, &y)| self.holds(x, y)).map(|(j, _)| j),
                )
            })
            .collect();
        Relation { order: members.len(), rows }
    }

    /// `self` is contained in `other` pairwise.
    pub fn is_subrelation_of(&self, other: &Relation) -> bool {
        self.order == other.order && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(*b))
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.order).map(|x| (0..self.order).map(|y| self.holds(x, y)).collect()).collect()
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({:?})", self.rows)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.order {
            let line: Vec<&str> = (0..self.order).map(|y| if self.holds(x, y) { "1" } else { "0" }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn leq(m: &Magma) -> Relation {
    Relation { order: m.order(), rows: m.column_images() }
}

pub fn is_reflexive(r: &Relation) -> PropertyVerdict {
    match (0..r.order).find(|&x| !r.holds(x, x)) {
        Some(x) => PropertyVerdict::fails("reflexive", vec![x]),
        None => PropertyVerdict::holds("reflexive"),
    }
}

pub fn is_antisymmetric(r: &Relation) -> PropertyVerdict {
    let n = r.order;
    let witness =
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| x != y && r.holds(x, y) && r.holds(y, x));
    match witness {
        Some((x, y)) => PropertyVerdict::fails("antisymmetric", vec![x, y]),
        None => PropertyVerdict::holds("antisymmetric"),
    }
}

pub fn is_transitive(r: &Relation) -> PropertyVerdict {
    let n = r.order;
    for x in 0..n {
        for y in r.rows[x].iter() {
            for z in r.rows[y].iter() {
                if !r.holds(x, z) {
                    return PropertyVerdict::fails("transitive", vec![x, y, z]);
                }
            }
        }
    }
    PropertyVerdict::holds("transitive")
}

/// Result of checking that a surjective row dominates every element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Domination {
    /// First `a` with `a * X = X`; `None` makes the check vacuous.
    pub surjective_row: Option<usize>,
    pub verdict: PropertyVerdict,
}

/// When some row is surjective, every `y` has an `x` with `x <= y`.
/// The failure witness is the undominated `y`.
pub fn dominated_elements(m: &Magma) -> Domination {
    let n = m.order();
    let full = ElementSet::full(n);
    let surjective_row = (0..n).find(|&a| m.row_image(a) == full);
    let verdict = match surjective_row {
        None => PropertyVerdict::holds("dominated"),
        Some(_) => {
            let relation = leq(m);
            match (0..n).find(|&y| !(0..n).any(|x| relation.holds(x, y))) {
                Some(y) => PropertyVerdict::fails("dominated", vec![y]),
                None => PropertyVerdict::holds("dominated"),
            }
        }
    };
    Domination { surjective_row, verdict }
}
