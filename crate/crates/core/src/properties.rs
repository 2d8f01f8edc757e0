//! Decidable predicates on finite magmas.
//!
//! Universally quantified predicates report the first counterexample in
//! lexicographic scan order (`x`, then `y`, then `z`). The `*_holds`
//! variants skip witness bookkeeping and are what the census hot loop calls.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::census::odometer_step;
use crate::error::{MagmaError, Result};
use crate::magma::{ElementSet, Magma};

/// Outcome of a predicate together with its witness tuple, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl PropertyVerdict {
    pub fn holds(property: &str) -> Self {
        PropertyVerdict { property: property.to_owned(), holds: true, witness: None }
    }

    pub fn fails(property: &str, witness: Vec<usize>) -> Self {
        PropertyVerdict { property: property.to_owned(), holds: false, witness: Some(witness) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }

    fn from_witness(property: &str, witness: Option<Vec<usize>>) -> Self {
        match witness {
            None => Self::holds(property),
            Some(w) => Self::fails(property, w),
        }
    }
}

/// Every column is surjective: for all `x, y` some `a` has `a * x = y`.
/// Mutual reachability is the same statement read with `x` and `y` swapped.
pub fn condition_i(m: &Magma) -> PropertyVerdict {
    let n = m.order();
    let full = ElementSet::full(n);
    let witness = (0..n).find_map(|x| {
        let image = m.column_image(x);
        (image != full).then(|| vec![x, (0..n).find(|&y| !image.contains(y)).unwrap()])
    });
    PropertyVerdict::from_witness("condition-i", witness)
}

#[inline]
pub fn condition_i_holds(m: &Magma) -> bool {
    let full = ElementSet::full(m.order());
    (0..m.order()).all(|x| m.column_image(x) == full)
}

/// For all `x, y, z` some `w` has `x * (y * z) = w * z`.
pub fn condition_ii(m: &Magma) -> PropertyVerdict {
    PropertyVerdict::from_witness("condition-ii", condition_ii_witness(m))
}

pub fn condition_ii_holds(m: &Magma) -> bool {
    condition_ii_witness(m).is_none()
}

fn condition_ii_witness(m: &Magma) -> Option<Vec<usize>> {
    let n = m.order();
    let images = m.column_images();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !images[z].contains(m.op(x, m.op(y, z))) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// Conditions (i) and (ii) together. A failure of (i) reports the pair
/// `[x, y]`; a failure of (ii) reports the triple `[x, y, z]`.
pub fn is_right_feeble(m: &Magma) -> PropertyVerdict {
    let first = condition_i(m);
    let witness = match first.witness {
        Some(w) => Some(w),
        None => condition_ii_witness(m),
    };
    PropertyVerdict::from_witness("right-feeble", witness)
}

#[inline]
pub fn is_right_feeble_holds(m: &Magma) -> bool {
    condition_i_holds(m) && condition_ii_holds(m)
}

/// Elements whose column covers the whole carrier.
pub fn rho(m: &Magma) -> ElementSet {
    let full = ElementSet::full(m.order());
    ElementSet::from_elements((0..m.order()).filter(|&x| m.column_image(x) == full))
}

/// `rho(m)` is the whole carrier. The witness is the first element outside it.
pub fn is_right_entire(m: &Magma) -> PropertyVerdict {
    let full = ElementSet::full(m.order());
    let witness = (0..m.order()).find(|&x| m.column_image(x) != full).map(|x| vec![x]);
    PropertyVerdict::from_witness("right-entire", witness)
}

/// No two distinct elements reach each other through their columns.
pub fn is_right_asymmetric(m: &Magma) -> PropertyVerdict {
    PropertyVerdict::from_witness("right-asymmetric", right_asymmetric_witness(m))
}

pub fn is_right_asymmetric_holds(m: &Magma) -> bool {
    right_asymmetric_witness(m).is_none()
}

fn right_asymmetric_witness(m: &Magma) -> Option<Vec<usize>> {
    let n = m.order();
    let images = m.column_images();
    for x in 0..n {
        for y in 0..n {
            if x != y && images[x].contains(y) && images[y].contains(x) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// `Some(f)` with `x * y = f(x)` when every row is constant.
pub fn as_leftoid(m: &Magma) -> Option<Vec<usize>> {
    (0..m.order())
        .all(|l| m.row(l).iter().all(|&e| e == m.row(l)[0]))
        .then(|| (0..m.order()).map(|l| m.op(l, 0)).collect())
}

/// `Some(g)` with `x * y = g(y)` when every column is constant.
pub fn as_rightoid(m: &Magma) -> Option<Vec<usize>> {
    let first = m.row(0);
    (1..m.order()).all(|l| m.row(l) == first).then(|| first.iter().map(|&e| e as usize).collect())
}

pub fn is_constant(m: &Magma) -> bool {
    m.flat().iter().all(|&e| e == m.flat()[0])
}

pub fn is_associative(m: &Magma) -> PropertyVerdict {
    PropertyVerdict::from_witness("associative", associativity_witness(m))
}

pub fn is_associative_holds(m: &Magma) -> bool {
    associativity_witness(m).is_none()
}

fn associativity_witness(m: &Magma) -> Option<Vec<usize>> {
    let n = m.order();
    for x in 0..n {
        for y in 0..n {
            let xy = m.op(x, y);
            for z in 0..n {
                if m.op(xy, z) != m.op(x, m.op(y, z)) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupStructure {
    pub identity: usize,
    pub inverse: Vec<usize>,
}

/// Identity and inverse map when `m` is a group.
pub fn as_group(m: &Magma) -> Option<GroupStructure> {
    let n = m.order();
    let identity = (0..n).find(|&e| (0..n).all(|x| m.op(e, x) == x && m.op(x, e) == x))?;
    let inverse = (0..n)
        .map(|x| (0..n).find(|&y| m.op(x, y) == identity && m.op(y, x) == identity))
        .collect::<Option<Vec<_>>>()?;
    is_associative_holds(m).then_some(GroupStructure { identity, inverse })
}

/// First `e` with `e * x = x` for every `x`.
pub fn has_left_identity(m: &Magma) -> Option<usize> {
    (0..m.order()).find(|&e| m.row(e).iter().enumerate().all(|(x, &v)| v as usize == x))
}

/// First `z` with `z * x = z` for every `x`.
pub fn zero_fixed_element(m: &Magma) -> Option<usize> {
    (0..m.order()).find(|&z| m.row(z).iter().all(|&v| v as usize == z))
}

/// `a * x = a` forces `x = e`. Witness `[a, x]`.
pub fn right_id_forcing(m: &Magma, e: usize) -> PropertyVerdict {
    let n = m.order();
    let witness = (0..n)
        .flat_map(|a| (0..n).map(move |x| (a, x)))
        .find(|&(a, x)| m.op(a, x) == a && x != e)
        .map(|(a, x)| vec![a, x]);
    PropertyVerdict::from_witness("right-id-forcing", witness)
}

/// Some element `e` satisfies [`right_id_forcing`].
pub fn has_right_id_forcing(m: &Magma) -> Option<usize> {
    (0..m.order()).find(|&e| right_id_forcing(m, e).holds)
}

/// `{x * y, y * x} = {x, y}` for all `x != y`.
pub fn pair_swap_condition(m: &Magma) -> PropertyVerdict {
    let n = m.order();
    let witness = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| {
            if x == y {
                return false;
            }
            let (p, q) = (m.op(x, y), m.op(y, x));
            !((p == x && q == y) || (p == y && q == x))
        })
        .map(|(x, y)| vec![x, y]);
    PropertyVerdict::from_witness("pair-swap", witness)
}

/// Largest order at which [`is_center_member`] quantifies over all magmas.
pub const CENTER_MAX_ORDER: usize = 3;

/// `m` commutes under the binary-system product with every magma of its
/// order. The witness is the flattened table of the first magma `q` (in
/// census order) with `m . q != q . m`.
pub fn is_center_member(m: &Magma) -> Result<PropertyVerdict> {
    let n = m.order();
    if n > CENTER_MAX_ORDER {
        return Err(MagmaError::UnsupportedOrder { operation: "center membership", order: n, max: CENTER_MAX_ORDER });
    }
    let mut q = vec![0u8; n * n];
    loop {
        if !commutes_under_bin_product(m.flat(), &q, n) {
            let witness = q.iter().map(|&e| e as usize).collect();
            return Ok(PropertyVerdict::fails("center", witness));
        }
        if !odometer_step(&mut q, n as u8) {
            return Ok(PropertyVerdict::holds("center"));
        }
    }
}

/// Compares `a . b` with `b . a` entrywise, where
/// `(a . b)(x, y) = b(a(x, y), a(y, x))`.
fn commutes_under_bin_product(a: &[u8], b: &[u8], n: usize) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            let ab = b[a[x * n + y] as usize * n + a[y * n + x] as usize];
            let ba = a[b[x * n + y] as usize * n + b[y * n + x] as usize];
            ab == ba
        })
    })
}

/// Named predicates, for the census filter and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Always,
    ConditionI,
    ConditionII,
    RightFeeble,
    RightEntire,
    RightAsymmetric,
    Associative,
    Group,
    Leftoid,
    Rightoid,
    Constant,
    LeftIdentity,
    ZeroFixed,
    RightIdForcing,
    PairSwap,
    Center,
}

impl Property {
    pub const ALL: [Property; 16] = [
        Property::Always,
        Property::ConditionI,
        Property::ConditionII,
        Property::RightFeeble,
        Property::RightEntire,
        Property::RightAsymmetric,
        Property::Associative,
        Property::Group,
        Property::Leftoid,
        Property::Rightoid,
        Property::Constant,
        Property::LeftIdentity,
        Property::ZeroFixed,
        Property::RightIdForcing,
        Property::PairSwap,
        Property::Center,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Always => "always",
            Property::ConditionI => "condition-i",
            Property::ConditionII => "condition-ii",
            Property::RightFeeble => "right-feeble",
            Property::RightEntire => "right-entire",
            Property::RightAsymmetric => "right-asymmetric",
            Property::Associative => "associative",
            Property::Group => "group",
            Property::Leftoid => "leftoid",
            Property::Rightoid => "rightoid",
            Property::Constant => "constant",
            Property::LeftIdentity => "left-identity",
            Property::ZeroFixed => "zero-fixed",
            Property::RightIdForcing => "right-id-forcing",
            Property::PairSwap => "pair-swap",
            Property::Center => "center",
        }
    }

    /// Whether the property implies that every column is surjective, which
    /// makes the right-entire restricted census exact for it.
    pub fn implies_right_entire(self) -> bool {
        matches!(self, Property::ConditionI | Property::RightFeeble | Property::RightEntire | Property::Group)
    }

    /// Fast boolean evaluation. Center membership above its order bound
    /// evaluates to `false`; use [`Property::verdict`] to get the error.
    pub fn holds(self, m: &Magma) -> bool {
        match self {
            Property::Always => true,
            Property::ConditionI | Property::RightEntire => condition_i_holds(m),
            Property::ConditionII => condition_ii_holds(m),
            Property::RightFeeble => is_right_feeble_holds(m),
            Property::RightAsymmetric => is_right_asymmetric_holds(m),
            Property::Associative => is_associative_holds(m),
            Property::Group => as_group(m).is_some(),
            Property::Leftoid => as_leftoid(m).is_some(),
            Property::Rightoid => as_rightoid(m).is_some(),
            Property::Constant => is_constant(m),
            Property::LeftIdentity => has_left_identity(m).is_some(),
            Property::ZeroFixed => zero_fixed_element(m).is_some(),
            Property::RightIdForcing => has_right_id_forcing(m).is_some(),
            Property::PairSwap => pair_swap_condition(m).holds,
            Property::Center => is_center_member(m).map(|v| v.holds).unwrap_or(false),
        }
    }

    /// Full verdict. Existential properties report their witness element on
    /// success; universal ones report the first counterexample on failure.
    pub fn verdict(self, m: &Magma) -> Result<PropertyVerdict> {
        let name = self.name();
        let exists = |found: Option<Vec<usize>>| match found {
            Some(w) => PropertyVerdict { property: name.into(), holds: true, witness: Some(w) },
            None => PropertyVerdict { property: name.into(), holds: false, witness: None },
        };
        let verdict = match self {
            Property::Always => PropertyVerdict::holds(name),
            Property::ConditionI => condition_i(m),
            Property::ConditionII => condition_ii(m),
            Property::RightFeeble => is_right_feeble(m),
            Property::RightEntire => is_right_entire(m),
            Property::RightAsymmetric => is_right_asymmetric(m),
            Property::Associative => is_associative(m),
            Property::Group => exists(as_group(m).map(|g| vec![g.identity])),
            Property::Leftoid => exists(as_leftoid(m)),
            Property::Rightoid => exists(as_rightoid(m)),
            Property::Constant => exists(is_constant(m).then(|| vec![m.op(0, 0)])),
            Property::LeftIdentity => exists(has_left_identity(m).map(|e| vec![e])),
            Property::ZeroFixed => exists(zero_fixed_element(m).map(|z| vec![z])),
            Property::RightIdForcing => exists(has_right_id_forcing(m).map(|e| vec![e])),
            Property::PairSwap => pair_swap_condition(m),
            Property::Center => is_center_member(m)?,
        };
        Ok(verdict)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = MagmaError;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| MagmaError::UnknownProperty(s.to_owned()))
    }
}

/// A conjunction of possibly negated properties, written `a+b+!c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    literals: Vec<(Property, bool)>,
}

impl Filter {
    pub fn new(literals: Vec<(Property, bool)>) -> Self {
        Filter { literals }
    }

    pub fn all_of(properties: &[Property]) -> Self {
        Filter { literals: properties.iter().map(|&p| (p, true)).collect() }
    }

    pub fn literals(&self) -> &[(Property, bool)] {
        &self.literals
    }

    #[inline]
    pub fn matches(&self, m: &Magma) -> bool {
        self.literals.iter().all(|&(p, want)| p.holds(m) == want)
    }

    /// Whether every match is guaranteed to be right entire.
    pub fn implies_right_entire(&self) -> bool {
        self.literals.iter().any(|&(p, want)| want && p.implies_right_entire())
    }

    pub fn uses_center(&self) -> bool {
        self.literals.iter().any(|&(p, _)| p == Property::Center)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, want)) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if !want {
                f.write_str("!")?;
            }
            f.write_str(p.name())?;
        }
        Ok(())
    }
}

impl FromStr for Filter {
    type Err = MagmaError;

    fn from_str(s: &str) -> Result<Self> {
        let literals = s
            .split('+')
            .map(|lit| {
                let lit = lit.trim();
                match lit.strip_prefix('!') {
                    Some(rest) => Ok((rest.parse()?, false)),
                    None => Ok((lit.parse()?, true)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if literals.is_empty() {
            return Err(MagmaError::UnknownProperty(s.to_owned()));
        }
        Ok(Filter { literals })
    }
}
