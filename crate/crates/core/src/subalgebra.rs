//! Subgroupoids and divisibility.

use serde::Serialize;

use crate::error::{MagmaError, Result};
use crate::magma::{ElementSet, Magma};
use crate::properties::PropertyVerdict;

/// Largest parent order for [`subgroupoids`] (a `2^n` subset scan).
pub const SUBGROUPOID_MAX_ORDER: usize = 16;

/// A nonempty subset of the parent closed under its operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subgroupoid<'a> {
    parent: &'a Magma,
    members: ElementSet,
}

impl<'a> Subgroupoid<'a> {
    pub fn new(parent: &'a Magma, members: ElementSet) -> Result<Self> {
        if members.is_empty() || !members.is_subset(ElementSet::full(parent.order())) || !is_closed(parent, members) {
            return Err(MagmaError::NotClosed(format!("{members:?}")));
        }
        Ok(Subgroupoid { parent, members })
    }

    pub fn whole(parent: &'a Magma) -> Self {
        Subgroupoid { parent, members: ElementSet::full(parent.order()) }
    }

    pub fn parent(&self) -> &'a Magma {
        self.parent
    }

    pub fn members(&self) -> ElementSet {
        self.members
    }

    /// The restricted operation, relabelled so the members become
    /// `0..|A|` in increasing order.
    pub fn restrict(&self) -> Magma {
        let members = self.members.to_vec();
        let mut index = [0usize; 64];
        for (i, &x) in members.iter().enumerate() {
            index[x] = i;
        }
        Magma::from_fn(members.len(), |l, r| index[self.parent.op(members[l], members[r])])
    }
}

#[derive(Serialize)]
pub struct SubgroupoidEntry {
    pub members: Vec<usize>,
    pub divisible: bool,
}

pub fn is_closed(m: &Magma, set: ElementSet) -> bool {
    set.iter().all(|x| set.iter().all(|y| set.contains(m.op(x, y))))
}

/// All subgroupoids, sorted by size and then by member list.
pub fn subgroupoids(m: &Magma) -> Result<Vec<Subgroupoid<'_>>> {
    let n = m.order();
    if n > SUBGROUPOID_MAX_ORDER {
        return Err(MagmaError::UnsupportedOrder {
            operation: "subgroupoid enumeration",
            order: n,
            max: SUBGROUPOID_MAX_ORDER,
        });
    }
    let mut subs: Vec<Subgroupoid<'_>> = (1..1u64 << n)
        .map(ElementSet)
        .filter(|&s| is_closed(m, s))
        .map(|members| Subgroupoid { parent: m, members })
        .collect();
    subs.sort_by_key(|s| (s.members.len(), s.members.to_vec()));
    Ok(subs)
}

/// `g * x = y` with `x, y` in `A` forces `g` into `A`. Witness `[g, x, y]`.
pub fn is_divisible(m: &Magma, a: &Subgroupoid<'_>) -> PropertyVerdict {
    divisible_set(m, a.members)
}

pub(crate) fn divisible_set(m: &Magma, set: ElementSet) -> PropertyVerdict {
    for g in (0..m.order()).filter(|&g| !set.contains(g)) {
        for x in set.iter() {
            let y = m.op(g, x);
            if set.contains(y) {
                return PropertyVerdict::fails("divisible", vec![g, x, y]);
            }
        }
    }
    PropertyVerdict::holds("divisible")
}

pub fn divisible_subgroupoids(m: &Magma) -> Result<Vec<Subgroupoid<'_>>> {
    Ok(subgroupoids(m)?.into_iter().filter(|s| is_divisible(m, s).holds).collect())
}

/// Every subgroupoid paired with its divisibility flag.
pub fn subgroupoid_listing(m: &Magma) -> Result<Vec<SubgroupoidEntry>> {
    Ok(subgroupoids(m)?
        .iter()
        .map(|s| SubgroupoidEntry { members: s.members.to_vec(), divisible: is_divisible(m, s).holds })
        .collect())
}
