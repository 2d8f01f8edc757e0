//! Bounded verification of the structural claims about right feeble groups,
//! right entire and right asymmetric groupoids, divisibility and the product
//! of binary systems.
//!
//! Each registry entry is a universal claim checked over an explicit finite
//! family: exhaustive censuses up to a maximum order, plus fixed structured
//! families (cyclic groups, finite analogs of the infinite examples). A
//! failing entry always carries a concrete magma and witness tuple.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::census::{
    all_magmas, all_magmas_par, enumerate, enumerate_right_entire, right_entire_count, right_entire_magmas_par,
    table_count, CensusOptions,
};
use crate::constructions::{bin_product, direct_product};
use crate::error::{MagmaError, Result};
use crate::magma::{self, ElementSet, Magma};
use crate::morphisms::{homomorphisms, is_isomorphic};
use crate::properties::{self, Filter, Property, PropertyVerdict};
use crate::relations::{self, leq};
use crate::subalgebra::{divisible_subgroupoids, is_closed, is_divisible, subgroupoids, Subgroupoid};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labeled {
    pub label: String,
    pub magma: Magma,
}

/// A concrete violation: `property` evaluated on `subject` gives `witness`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub subject: Magma,
    pub property: String,
    pub witness: Vec<usize>,
    pub context: Vec<Labeled>,
    pub detail: String,
}

impl Counterexample {
    fn from_verdict(subject: &Magma, verdict: PropertyVerdict, detail: impl Into<String>) -> Self {
        Counterexample {
            subject: subject.clone(),
            property: verdict.property,
            witness: verdict.witness.unwrap_or_default(),
            context: Vec::new(),
            detail: detail.into(),
        }
    }

    fn with_context(mut self, label: impl Into<String>, magma: &Magma) -> Self {
        self.context.push(Labeled { label: label.into(), magma: magma.clone() });
        self
    }

    /// Re-evaluates the named property on the subject and reports whether it
    /// still fails with the same witness. `None` for properties that are not
    /// predicates on a single magma.
    pub fn recheck(&self) -> Option<bool> {
        let verdict = match self.property.as_str() {
            "reflexive" => relations::is_reflexive(&leq(&self.subject)),
            "antisymmetric" => relations::is_antisymmetric(&leq(&self.subject)),
            "transitive" => relations::is_transitive(&leq(&self.subject)),
            "dominated" => relations::dominated_elements(&self.subject).verdict,
            name => name.parse::<Property>().ok()?.verdict(&self.subject).ok()?,
        };
        Some(!verdict.holds && verdict.witness.as_deref() == Some(&self.witness[..]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub id: &'static str,
    pub claim: &'static str,
    pub bound: String,
    pub verdict: Verdict,
    pub instances: u64,
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

struct Outcome {
    bound: String,
    instances: u64,
    failure: Option<Counterexample>,
}

pub struct Theorem {
    pub id: &'static str,
    pub claim: &'static str,
    /// Census order used by [`verify_all`] without an explicit bound.
    pub default_order: usize,
    /// Largest census order the entry accepts.
    pub max_order: usize,
    check: fn(usize) -> Outcome,
}

pub fn registry() -> &'static [Theorem] {
    REGISTRY
}

pub fn find(id: &str) -> Result<&'static Theorem> {
    REGISTRY.iter().find(|t| t.id == id).ok_or_else(|| MagmaError::UnknownTheorem(id.to_owned()))
}

/// Runs one entry with censuses up to `max_order`.
pub fn verify(id: &str, max_order: usize) -> Result<TheoremReport> {
    let theorem = find(id)?;
    if max_order == 0 {
        return Err(MagmaError::EmptyOrder);
    }
    if max_order > theorem.max_order {
        return Err(MagmaError::UnsupportedOrder {
            operation: "theorem check",
            order: max_order,
            max: theorem.max_order,
        });
    }
    Ok(run(theorem, max_order))
}

/// Runs the whole registry in parallel, reports in registry order. With
/// `None` each entry uses its default order; otherwise the given order is
/// clamped to each entry's maximum.
pub fn verify_all(max_order: Option<usize>) -> Vec<TheoremReport> {
    REGISTRY
        .par_iter()
        .map(|t| {
            let order = max_order.map_or(t.default_order, |n| n.clamp(1, t.max_order));
            run(t, order)
        })
        .collect()
}

fn run(theorem: &Theorem, max_order: usize) -> TheoremReport {
    let started = Instant::now();
    let outcome = (theorem.check)(max_order);
    report(theorem.id, theorem.claim, outcome, started)
}

fn report(id: &'static str, claim: &'static str, outcome: Outcome, started: Instant) -> TheoremReport {
    TheoremReport {
        id,
        claim,
        bound: outcome.bound,
        verdict: if outcome.failure.is_none() { Verdict::Pass } else { Verdict::Fail },
        instances: outcome.instances,
        counterexample: outcome.failure,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

// ---------------------------------------------------------------------------
// families

fn orders(max_order: usize) -> std::ops::RangeInclusive<usize> {
    1..=max_order
}

fn census_instances(max_order: usize) -> u64 {
    orders(max_order).map(table_count).sum()
}

/// First counterexample over every magma of order `1..=max_order`.
fn scan_census<F>(max_order: usize, check: F) -> Option<Counterexample>
where
    F: Fn(&Magma) -> Option<Counterexample> + Sync,
{
    orders(max_order).find_map(|n| all_magmas_par(n).find_map_first(|m| check(&m)))
}

/// Same, over the tables with every column a permutation.
fn scan_right_entire<F>(max_order: usize, check: F) -> Option<Counterexample>
where
    F: Fn(&Magma) -> Option<Counterexample> + Sync,
{
    orders(max_order).find_map(|n| right_entire_magmas_par(n).find_map_first(|m| check(&m)))
}

fn right_entire_instances(max_order: usize) -> u64 {
    orders(max_order).map(right_entire_count).sum()
}

fn right_feeble_census(n: usize) -> Vec<Magma> {
    right_entire_magmas_par(n).filter(properties::is_right_feeble_holds).collect()
}

fn right_entire_census(n: usize) -> Vec<Magma> {
    right_entire_magmas_par(n).collect()
}

fn klein_four() -> Magma {
    let c2 = magma::cyclic_group(2).expect("order 2");
    direct_product(&c2, &c2).expect("order 4")
}

/// Cyclic groups of order 1 to 8, the symmetric group on three points and
/// the Klein four-group.
fn structured_groups() -> Vec<Labeled> {
    let mut groups: Vec<Labeled> = (1..=8)
        .map(|n| Labeled { label: format!("cyclic({n})"), magma: magma::cyclic_group(n).expect("valid") })
        .collect();
    groups.push(Labeled { label: "symmetric(3)".into(), magma: magma::symmetric_group(3).expect("valid") });
    groups.push(Labeled { label: "klein-four".into(), magma: klein_four() });
    groups
}

fn all_maps(n: usize) -> Vec<Vec<usize>> {
    let count = n.pow(n as u32);
    (0..count)
        .map(|mut code| {
            let mut f = vec![0; n];
            for v in f.iter_mut().rev() {
                *v = code % n;
                code /= n;
            }
            f
        })
        .collect()
}

fn is_surjective_map(f: &[usize]) -> bool {
    ElementSet::from_elements(f.iter().copied()) == ElementSet::full(f.len())
}

fn missing_value(f: &[usize]) -> Option<usize> {
    let image = ElementSet::from_elements(f.iter().copied());
    (0..f.len()).find(|&y| !image.contains(y))
}

fn expect_holds(m: &Magma, verdict: PropertyVerdict, detail: impl Into<String>) -> Option<Counterexample> {
    (!verdict.holds).then(|| Counterexample::from_verdict(m, verdict, detail))
}

/// A magma that should not be in some class but is. The witness is a pair
/// of distinct elements, or empty for the trivial magma.
fn membership_counterexample(m: &Magma, filter: &str, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        subject: m.clone(),
        property: filter.to_owned(),
        witness: if m.order() > 1 { vec![0, 1] } else { Vec::new() },
        context: Vec::new(),
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------------------
// group and leftoid claims

fn prop_3_3(max_order: usize) -> Outcome {
    let groups = structured_groups();
    let failure = groups
        .iter()
        .find_map(|g| expect_holds(&g.magma, properties::is_right_feeble(&g.magma), format!("{} is a group", g.label)))
        .or_else(|| {
            // groups are right entire, so order 4 only needs the restricted family
            let check = |m: &Magma| {
                properties::as_group(m)?;
                expect_holds(m, properties::is_right_feeble(m), "group found by census")
            };
            scan_census(max_order.min(3), check).or_else(|| {
                (max_order >= 4).then(|| right_entire_magmas_par(4).find_map_first(|m| check(&m))).flatten()
            })
        });
    let census = max_order.min(4);
    let instances = census_instances(census.min(3)) + if census == 4 { right_entire_count(4) } else { 0 };
    Outcome {
        bound: format!("cyclic groups of order 1..8, symmetric(3), klein-four; all groups of order <= {census}"),
        instances: groups.len() as u64 + instances,
        failure,
    }
}

fn prop_3_4(max_order: usize) -> Outcome {
    let mut instances = 0;
    let failure = orders(max_order).find_map(|n| {
        let maps = all_maps(n);
        instances += maps.len() as u64;
        maps.into_iter().filter(|f| is_surjective_map(f)).find_map(|f| {
            let m = magma::leftoid(n, &f).expect("valid map");
            expect_holds(&m, properties::is_right_feeble(&m), format!("leftoid over surjective {f:?}"))
        })
    });
    Outcome { bound: format!("all maps on orders 1..{max_order}"), instances, failure }
}

/// Exactly one magma of order 1 and none of larger orders satisfy `filter`.
/// Order 4 uses the right-entire family when the filter implies condition (i)
/// and the gated full scan otherwise.
fn singleton_intersection(max_order: usize, filter: &Filter) -> Outcome {
    let options = CensusOptions::default();
    let mut instances = 0;
    let mut failure = None;
    for n in orders(max_order) {
        let report = if n > 3 && filter.implies_right_entire() {
            enumerate_right_entire(n, &filter.to_string(), |m| filter.matches(m), &options)
        } else {
            enumerate(n, &filter.to_string(), |m| filter.matches(m), &options.clone().allow_long_run(n > 3))
        }
        .expect("orders are within census bounds");
        instances += report.total;
        let expected = u64::from(n == 1);
        if report.matches != expected {
            let subject = report.first_match.clone().unwrap_or_else(|| magma::constant(1, 0).expect("order 1"));
            failure = Some(membership_counterexample(
                &subject,
                &filter.to_string(),
                format!("order {n}: {} magmas in the intersection, expected {expected}", report.matches),
            ));
            break;
        }
    }
    let family =
        if max_order > 3 && filter.implies_right_entire() { " (right-entire tables beyond order 3)" } else { "" };
    Outcome { bound: format!("full census, orders 1..{max_order}{family}"), instances, failure }
}

fn thm_3_5(max_order: usize) -> Outcome {
    singleton_intersection(max_order, &Filter::all_of(&[Property::Group, Property::Leftoid]))
}

fn thm_4_6(max_order: usize) -> Outcome {
    singleton_intersection(max_order, &Filter::all_of(&[Property::RightEntire, Property::RightAsymmetric]))
}

fn sec2_k1k2(max_order: usize) -> Outcome {
    singleton_intersection(max_order, &Filter::all_of(&[Property::ZeroFixed, Property::RightIdForcing]))
}

fn sec2_leftoid_rightoid(max_order: usize) -> Outcome {
    let options = CensusOptions::default().up_to_iso(true);
    let both = Filter::all_of(&[Property::Leftoid, Property::Rightoid]);
    let mut instances = 0;
    let failure = orders(max_order).find_map(|n| {
        let report = enumerate(n, &both.to_string(), |m| both.matches(m), &options).expect("within bounds");
        instances += report.total;
        let nonconstant = all_magmas(n).find(|m| both.matches(m) && !properties::is_constant(m));
        if let Some(m) = nonconstant {
            return Some(membership_counterexample(
                &m,
                "leftoid+rightoid+!constant",
                "non-constant magma in both classes",
            ));
        }
        (report.matches_up_to_iso != Some(1)).then(|| {
            membership_counterexample(
                report.first_match.as_ref().expect("constants always match"),
                &both.to_string(),
                format!("order {n}: {:?} isomorphism classes, expected 1", report.matches_up_to_iso),
            )
        })
    });
    Outcome {
        bound: format!("full census, orders 1..{max_order}; exactly one class up to isomorphism"),
        instances,
        failure,
    }
}

// ---------------------------------------------------------------------------
// epimorphic images and products

/// Every surjective image of a `premise` magma of order `<= max_order` onto a
/// magma of order `<= 2` satisfies `conclusion`.
fn epimorphic_images(
    max_order: usize,
    premise: fn(usize) -> Vec<Magma>,
    conclusion: fn(&Magma) -> PropertyVerdict,
) -> Outcome {
    let targets: Vec<Magma> = orders(max_order.min(2)).flat_map(all_magmas).collect();
    let mut instances = 0;
    let failure = orders(max_order).find_map(|n| {
        let sources = premise(n);
        instances += (sources.len() * targets.len()) as u64;
        sources.par_iter().find_map_first(|a| {
            targets.iter().filter(|b| b.order() <= a.order()).find_map(|b| {
                let epi = homomorphisms(a, b, true).expect("orders within hom bounds").into_iter().next()?;
                let verdict = conclusion(b);
                (!verdict.holds).then(|| {
                    Counterexample::from_verdict(b, verdict, format!("image under the epimorphism {:?}", epi.map))
                        .with_context("source", a)
                })
            })
        })
    });
    Outcome { bound: format!("sources of order 1..{max_order} onto every magma of order <= 2"), instances, failure }
}

fn prop_3_6(max_order: usize) -> Outcome {
    epimorphic_images(max_order, right_feeble_census, properties::is_right_feeble)
}

fn prop_4_3(max_order: usize) -> Outcome {
    epimorphic_images(max_order, right_entire_census, properties::is_right_entire)
}

/// Direct products of pairs drawn from the `premise` census satisfy
/// `conclusion`, plus any extra fixed pairs.
fn products(
    max_order: usize,
    premise: fn(usize) -> Vec<Magma>,
    conclusion: fn(&Magma) -> PropertyVerdict,
    extra: Vec<(Magma, Magma)>,
) -> Outcome {
    let factors: Vec<Magma> = orders(max_order).flat_map(premise).collect();
    let pairs: Vec<(&Magma, &Magma)> = extra
        .iter()
        .map(|(a, b)| (a, b))
        .chain(factors.iter().flat_map(|a| factors.iter().map(move |b| (a, b))))
        .collect();
    let failure = pairs.par_iter().find_map_first(|&(a, b)| {
        let p = direct_product(a, b).expect("product within bounds");
        let verdict = conclusion(&p);
        (!verdict.holds).then(|| {
            Counterexample::from_verdict(&p, verdict, "direct product")
                .with_context("left factor", a)
                .with_context("right factor", b)
        })
    });
    Outcome {
        bound: format!("all pairs from the census of orders 1..{max_order}, plus {} fixed pairs", extra.len()),
        instances: pairs.len() as u64,
        failure,
    }
}

fn prop_3_7(max_order: usize) -> Outcome {
    let extra = vec![(magma::midpoint(3).expect("odd"), magma::cyclic_group(2).expect("valid"))];
    products(max_order, right_feeble_census, properties::is_right_feeble, extra)
}

fn prop_4_2(max_order: usize) -> Outcome {
    products(max_order, right_entire_census, properties::is_right_entire, Vec::new())
}

fn prop_4_1(max_order: usize) -> Outcome {
    let failure = scan_census(max_order, |m| {
        if !properties::is_right_feeble_holds(m) {
            return None;
        }
        expect_holds(m, properties::is_right_entire(m), "right feeble magma")
    });
    Outcome { bound: format!("full census, orders 1..{max_order}"), instances: census_instances(max_order), failure }
}

fn prop_4_4(max_order: usize) -> Outcome {
    let mut instances = 0;
    let failure = orders(max_order).find_map(|n| {
        let maps = all_maps(n);
        instances += maps.len() as u64;
        maps.into_iter().find_map(|f| {
            let m = magma::leftoid(n, &f).expect("valid map");
            if !properties::is_right_entire(&m).holds {
                return None;
            }
            let y = missing_value(&f)?;
            Some(Counterexample {
                subject: m,
                property: "surjective-map".into(),
                witness: vec![y],
                context: Vec::new(),
                detail: format!("right entire leftoid over non-surjective {f:?}"),
            })
        })
    });
    Outcome { bound: format!("all maps on orders 1..{max_order}"), instances, failure }
}

// ---------------------------------------------------------------------------
// divisibility

/// Parent, subset pairs asserted to be a right feeble magma with a divisible
/// subgroupoid. The divisible-restriction check verifies the premises of
/// every fixture as well as its conclusion.
pub fn divisible_restriction_fixtures() -> Vec<(Magma, ElementSet)> {
    let c4 = magma::cyclic_group(4).expect("valid");
    let c6 = magma::cyclic_group(6).expect("valid");
    let mid5 = magma::midpoint(5).expect("odd");
    let s3 = magma::symmetric_group(3).expect("valid");
    vec![
        (c4, ElementSet::from_elements([0, 2])),
        (c6.clone(), ElementSet::from_elements([0, 3])),
        (c6, ElementSet::from_elements([0, 2, 4])),
        (klein_four(), ElementSet::from_elements([0, 1])),
        (s3.clone(), ElementSet::from_elements([0, 1])),
        (s3, ElementSet::from_elements([0, 3, 4])),
        (mid5.clone(), ElementSet::full(5)),
        (magma::leftoid(3, &[1, 2, 0]).expect("valid"), ElementSet::full(3)),
    ]
}

fn check_divisible_fixture(parent: &Magma, members: ElementSet) -> Option<Counterexample> {
    if let Some(cx) = expect_holds(parent, properties::is_right_feeble(parent), "fixture parent") {
        return Some(cx);
    }
    if members.is_empty() || !is_closed(parent, members) {
        return Some(Counterexample {
            subject: parent.clone(),
            property: "closed".into(),
            witness: members.to_vec(),
            context: Vec::new(),
            detail: "fixture subset is not a subgroupoid".into(),
        });
    }
    let sub = Subgroupoid::new(parent, members).expect("checked closed");
    let divisible = is_divisible(parent, &sub);
    if !divisible.holds {
        return Some(Counterexample::from_verdict(parent, divisible, format!("fixture subset {members:?}")));
    }
    restriction_check(parent, &sub, properties::is_right_feeble)
}

fn restriction_check(
    parent: &Magma,
    sub: &Subgroupoid<'_>,
    conclusion: fn(&Magma) -> PropertyVerdict,
) -> Option<Counterexample> {
    let restricted = sub.restrict();
    let verdict = conclusion(&restricted);
    (!verdict.holds).then(|| {
        Counterexample::from_verdict(
            &restricted,
            verdict,
            format!("restriction to the divisible subgroupoid {:?}", sub.members()),
        )
        .with_context("parent", parent)
    })
}

/// Divisible subgroupoids of right feeble magmas are right feeble, checked on
/// the given fixtures and on the census up to `max_order`.
pub fn verify_divisible_restriction(max_order: usize, fixtures: &[(Magma, ElementSet)]) -> TheoremReport {
    let started = Instant::now();
    let theorem = find("THM_3_10").expect("registered");
    let outcome = thm_3_10_with(max_order, fixtures);
    report(theorem.id, theorem.claim, outcome, started)
}

fn thm_3_10_with(max_order: usize, fixtures: &[(Magma, ElementSet)]) -> Outcome {
    let failure = fixtures.iter().find_map(|(m, a)| check_divisible_fixture(m, *a)).or_else(|| {
        scan_right_entire(max_order, |m| {
            if !properties::is_right_feeble_holds(m) {
                return None;
            }
            let subs = divisible_subgroupoids(m).expect("small order");
            subs.iter().find_map(|s| restriction_check(m, s, properties::is_right_feeble))
        })
    });
    Outcome {
        bound: format!("{} fixtures; right feeble census of orders 1..{max_order}", fixtures.len()),
        instances: fixtures.len() as u64 + right_entire_instances(max_order),
        failure,
    }
}

fn thm_3_10(max_order: usize) -> Outcome {
    thm_3_10_with(max_order, &divisible_restriction_fixtures())
}

fn thm_5_7(max_order: usize) -> Outcome {
    let failure = scan_right_entire(max_order, |m| {
        let subs = divisible_subgroupoids(m).expect("small order");
        subs.iter().find_map(|s| restriction_check(m, s, properties::is_right_entire))
    });
    Outcome {
        bound: format!("right entire census of orders 1..{max_order}"),
        instances: right_entire_instances(max_order),
        failure,
    }
}

fn prop_5_8(max_order: usize) -> Outcome {
    let failure = scan_census(max_order, |m| {
        if !properties::is_right_asymmetric_holds(m) {
            return None;
        }
        let subs = divisible_subgroupoids(m).expect("small order");
        subs.iter().find_map(|s| restriction_check(m, s, properties::is_right_asymmetric))
    });
    Outcome { bound: format!("full census, orders 1..{max_order}"), instances: census_instances(max_order), failure }
}

fn prop_5_9(max_order: usize) -> Outcome {
    let subgroups_divisible = |label: &str, g: &Magma| -> Option<Counterexample> {
        subgroupoids(g).expect("small order").into_iter().find_map(|s| {
            properties::as_group(&s.restrict())?;
            let verdict = is_divisible(g, &s);
            (!verdict.holds)
                .then(|| Counterexample::from_verdict(g, verdict, format!("subgroup {:?} of {label}", s.members())))
        })
    };
    let groups = structured_groups();
    let failure = groups.iter().find_map(|g| subgroups_divisible(&g.label, &g.magma)).or_else(|| {
        scan_census(max_order, |m| {
            properties::as_group(m)?;
            subgroups_divisible("census group", m)
        })
    });
    Outcome {
        bound: format!("cyclic groups of order 1..8, symmetric(3), klein-four; all groups of order <= {max_order}"),
        instances: groups.len() as u64 + census_instances(max_order),
        failure,
    }
}

fn sec3_div_intersection(max_order: usize) -> Outcome {
    let failure = scan_census(max_order, |m| {
        let subs = divisible_subgroupoids(m).expect("small order");
        subs.iter().enumerate().find_map(|(i, a)| {
            subs[i + 1..].iter().find_map(|b| {
                let meet = a.members().intersection(b.members());
                if meet.is_empty() {
                    return None;
                }
                if !is_closed(m, meet) {
                    return Some(Counterexample {
                        subject: m.clone(),
                        property: "closed".into(),
                        witness: meet.to_vec(),
                        context: Vec::new(),
                        detail: format!("intersection of {:?} and {:?}", a.members(), b.members()),
                    });
                }
                let sub = Subgroupoid::new(m, meet).expect("closed");
                let verdict = is_divisible(m, &sub);
                (!verdict.holds).then(|| Counterexample::from_verdict(m, verdict, format!("intersection {meet:?}")))
            })
        })
    });
    Outcome { bound: format!("full census, orders 1..{max_order}"), instances: census_instances(max_order), failure }
}

// ---------------------------------------------------------------------------
// the reachability relation

fn relation_census<F>(max_order: usize, check: F) -> Outcome
where
    F: Fn(&Magma) -> Option<Counterexample> + Sync,
{
    Outcome {
        bound: format!("full census, orders 1..{max_order}"),
        instances: census_instances(max_order),
        failure: scan_census(max_order, check),
    }
}

fn prop_5_1(max_order: usize) -> Outcome {
    relation_census(max_order, |m| {
        if !properties::condition_i_holds(m) {
            return None;
        }
        expect_holds(m, relations::is_reflexive(&leq(m)), "right entire magma")
    })
}

fn prop_5_2(max_order: usize) -> Outcome {
    relation_census(max_order, |m| {
        let asym = properties::is_right_asymmetric(m);
        let anti = relations::is_antisymmetric(&leq(m));
        match (asym.holds, anti.holds) {
            (true, false) => Some(Counterexample::from_verdict(m, anti, "right asymmetric magma")),
            (false, true) => Some(Counterexample::from_verdict(m, asym, "antisymmetric relation")),
            _ => None,
        }
    })
}

fn prop_5_3(max_order: usize) -> Outcome {
    relation_census(max_order, |m| {
        if !properties::is_right_feeble_holds(m) {
            return None;
        }
        expect_holds(m, relations::is_transitive(&leq(m)), "right feeble magma")
    })
}

fn prop_5_4(max_order: usize) -> Outcome {
    relation_census(max_order, |m| {
        let e = properties::has_left_identity(m)?;
        expect_holds(m, relations::is_reflexive(&leq(m)), format!("left identity {e}"))
    })
}

fn prop_5_5(max_order: usize) -> Outcome {
    relation_census(max_order, |m| {
        let d = relations::dominated_elements(m);
        let row = d.surjective_row?;
        expect_holds(m, d.verdict, format!("surjective row {row}"))
    })
}

fn prop_5_6(max_order: usize) -> Outcome {
    relation_census(max_order, |m| {
        let relation = leq(m);
        divisible_subgroupoids(m).expect("small order").into_iter().find_map(|s| {
            let inherited = relation.restrict(s.members());
            let own = leq(&s.restrict());
            if inherited.is_subrelation_of(&own) {
                return None;
            }
            let members = s.members().to_vec();
            let (i, j) = (0..members.len())
                .flat_map(|i| (0..members.len()).map(move |j| (i, j)))
                .find(|&(i, j)| inherited.holds(i, j) && !own.holds(i, j))
                .expect("some pair differs");
            Some(Counterexample {
                subject: m.clone(),
                property: "inherited-reachability".into(),
                witness: vec![members[i], members[j]],
                context: vec![Labeled { label: "restriction".into(), magma: s.restrict() }],
                detail: format!("pair reachable in the parent but not inside {:?}", s.members()),
            })
        })
    })
}

// ---------------------------------------------------------------------------
// product of binary systems

fn sec2_leftzero_id(max_order: usize) -> Outcome {
    let failure = orders(max_order).find_map(|n| {
        let lz = magma::left_zero(n).expect("valid");
        all_magmas_par(n).find_map_first(|m| {
            let left = bin_product(&lz, &m).expect("same order");
            let right = bin_product(&m, &lz).expect("same order");
            if left == m && right == m {
                return None;
            }
            let bad = if left != m { left } else { right };
            let pos = (0..n * n).find(|&i| bad.flat()[i] != m.flat()[i]).expect("differs");
            Some(Counterexample {
                subject: m.clone(),
                property: "left-zero-identity".into(),
                witness: vec![pos / n, pos % n],
                context: vec![Labeled { label: "product".into(), magma: bad }],
                detail: "left zero product changed an entry".into(),
            })
        })
    });
    Outcome { bound: format!("full census, orders 1..{max_order}"), instances: census_instances(max_order), failure }
}

fn sec2_leftoid_comp(max_order: usize) -> Outcome {
    let mut instances = 0;
    let failure = orders(max_order).find_map(|n| {
        let maps = all_maps(n);
        instances += (maps.len() * maps.len()) as u64;
        maps.par_iter().find_map_first(|f| {
            let lf = magma::leftoid(n, f).expect("valid");
            maps.iter().find_map(|g| {
                let composed: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                let product = bin_product(&lf, &magma::leftoid(n, g).expect("valid")).expect("same order");
                (product != magma::leftoid(n, &composed).expect("valid")).then(|| Counterexample {
                    subject: product,
                    property: "leftoid-composite".into(),
                    witness: composed.clone(),
                    context: vec![Labeled { label: "first factor".into(), magma: lf.clone() }],
                    detail: format!("f = {f:?}, g = {g:?}"),
                })
            })
        })
    });
    Outcome { bound: format!("all map pairs on orders 1..{max_order}"), instances, failure }
}

fn sec2_constant_iso(max_order: usize) -> Outcome {
    let mut instances = 0;
    let failure = orders(max_order).find_map(|n| {
        (0..n).flat_map(|c| (0..n).map(move |d| (c, d))).find_map(|(c, d)| {
            instances += 1;
            let (a, b) = (magma::constant(n, c).expect("valid"), magma::constant(n, d).expect("valid"));
            match is_isomorphic(&a, &b) {
                Some(sigma) if sigma[c] == d => None,
                other => Some(Counterexample {
                    subject: a,
                    property: "isomorphic".into(),
                    witness: other.unwrap_or_default(),
                    context: vec![Labeled { label: "target".into(), magma: b }],
                    detail: format!("constant {c} vs constant {d}"),
                }),
            }
        })
    });
    Outcome { bound: format!("all constant pairs, orders 1..{max_order}"), instances, failure }
}

fn sec2_center_pair(max_order: usize) -> Outcome {
    let failure = scan_census(max_order, |m| {
        if !properties::is_center_member(m).expect("bounded order").holds {
            return None;
        }
        expect_holds(m, properties::pair_swap_condition(m), "central binary system")
    });
    Outcome { bound: format!("full census, orders 1..{max_order}"), instances: census_instances(max_order), failure }
}

// ---------------------------------------------------------------------------
// finite analogs of the worked examples

fn ex_3_1_analog(_: usize) -> Outcome {
    let moduli: Vec<usize> = (1..=15).step_by(2).collect();
    let failure = moduli.iter().find_map(|&m| {
        let mid = magma::midpoint(m).expect("odd");
        let detail = format!("midpoint({m})");
        expect_holds(&mid, properties::is_right_feeble(&mid), detail.clone()).or_else(|| {
            if m < 3 {
                return None;
            }
            if properties::is_associative(&mid).holds || properties::as_group(&mid).is_some() {
                return Some(membership_counterexample(&mid, "associative", format!("{detail} is associative")));
            }
            None
        })
    });
    Outcome {
        bound: "midpoint(m) for odd m in 1..15; non-associative for m >= 3".into(),
        instances: moduli.len() as u64,
        failure,
    }
}

fn ex_3_2_analog(_: usize) -> Outcome {
    let mut instances = 0;
    let failure = [2usize, 3, 5, 7].into_iter().find_map(|p| {
        (0..p).flat_map(|a| (1..p).flat_map(move |b| (1..p).map(move |c| (a, b, c)))).find_map(|(a, b, c)| {
            instances += 1;
            let m = magma::affine(p, a, b, c).expect("admissible");
            expect_holds(&m, properties::is_right_feeble(&m), format!("affine({p}, {a}, {b}, {c})"))
        })
    });
    Outcome { bound: "affine(p, a, b, c) for p in {2, 3, 5, 7}, all admissible a, b, c".into(), instances, failure }
}

fn ex_3_8_analog(_: usize) -> Outcome {
    let failure = (1..=6).find_map(|k| {
        let m = magma::saturating_add(k).expect("valid");
        properties::is_right_feeble(&m)
            .holds
            .then(|| membership_counterexample(&m, "right-feeble", format!("saturating_add({k}) is right feeble")))
    });
    Outcome { bound: "saturating_add(k) for k in 1..6".into(), instances: 6, failure }
}

fn ex_3_9_analog(_: usize) -> Outcome {
    let primes = [2usize, 3, 5, 7, 11, 13];
    let failure = primes
        .iter()
        .find_map(|&p| {
            let z = magma::multiplicative(p).expect("valid");
            let units = Subgroupoid::new(&z, ElementSet::from_elements(1..p)).ok()?;
            expect_holds(&z, is_divisible(&z, &units), format!("nonzero residues mod {p}"))
        })
        .or_else(|| {
            let z6 = magma::multiplicative(6).expect("valid");
            let evens = Subgroupoid::new(&z6, ElementSet::from_elements([0, 2, 4])).expect("closed");
            is_divisible(&z6, &evens)
                .holds
                .then(|| membership_counterexample(&z6, "divisible", "even residues mod 6 reported divisible"))
        });
    Outcome {
        bound: "units of Z_p under multiplication for p <= 13; even residues of Z_6".into(),
        instances: primes.len() as u64 + 1,
        failure,
    }
}

fn ex_4_5_analog(_: usize) -> Outcome {
    let failure = (0..=6).find_map(|k| {
        let m = magma::saturating_add(k).expect("valid");
        expect_holds(&m, properties::is_right_asymmetric(&m), format!("saturating_add({k})"))
    });
    Outcome { bound: "saturating_add(k) for k in 0..6".into(), instances: 7, failure }
}

static REGISTRY: &[Theorem] = &[
    Theorem { id: "PROP_3_3", claim: "every group is right feeble", default_order: 4, max_order: 8, check: prop_3_3 },
    Theorem {
        id: "PROP_3_4",
        claim: "a leftoid over a surjective map is right feeble",
        default_order: 6,
        max_order: 6,
        check: prop_3_4,
    },
    Theorem {
        id: "THM_3_5",
        claim: "groups and leftoids share only the one-element magma",
        default_order: 4,
        max_order: 4,
        check: thm_3_5,
    },
    Theorem {
        id: "PROP_3_6",
        claim: "an epimorphic image of a right feeble magma is right feeble",
        default_order: 3,
        max_order: 3,
        check: prop_3_6,
    },
    Theorem {
        id: "PROP_3_7",
        claim: "the direct product of right feeble magmas is right feeble",
        default_order: 3,
        max_order: 3,
        check: prop_3_7,
    },
    Theorem {
        id: "THM_3_10",
        claim: "a divisible subgroupoid of a right feeble magma is right feeble",
        default_order: 4,
        max_order: 4,
        check: thm_3_10,
    },
    Theorem {
        id: "SEC3_DIV_INTERSECTION",
        claim: "intersecting divisible subgroupoids meet in a divisible subgroupoid",
        default_order: 3,
        max_order: 3,
        check: sec3_div_intersection,
    },
    Theorem {
        id: "PROP_4_1",
        claim: "a right feeble magma is right entire",
        default_order: 3,
        max_order: 3,
        check: prop_4_1,
    },
    Theorem {
        id: "PROP_4_2",
        claim: "the direct product of right entire magmas is right entire",
        default_order: 3,
        max_order: 3,
        check: prop_4_2,
    },
    Theorem {
        id: "PROP_4_3",
        claim: "an epimorphic image of a right entire magma is right entire",
        default_order: 3,
        max_order: 3,
        check: prop_4_3,
    },
    Theorem {
        id: "PROP_4_4",
        claim: "a right entire leftoid has a surjective defining map",
        default_order: 6,
        max_order: 6,
        check: prop_4_4,
    },
    Theorem {
        id: "THM_4_6",
        claim: "right entire and right asymmetric magmas share only the one-element magma",
        default_order: 4,
        max_order: 4,
        check: thm_4_6,
    },
    Theorem {
        id: "PROP_5_1",
        claim: "reachability is reflexive in a right entire magma",
        default_order: 3,
        max_order: 3,
        check: prop_5_1,
    },
    Theorem {
        id: "PROP_5_2",
        claim: "a magma is right asymmetric iff reachability is antisymmetric",
        default_order: 3,
        max_order: 3,
        check: prop_5_2,
    },
    Theorem {
        id: "PROP_5_3",
        claim: "reachability is transitive in a right feeble magma",
        default_order: 3,
        max_order: 3,
        check: prop_5_3,
    },
    Theorem {
        id: "PROP_5_4",
        claim: "reachability is reflexive when a left identity exists",
        default_order: 3,
        max_order: 3,
        check: prop_5_4,
    },
    Theorem {
        id: "PROP_5_5",
        claim: "with a surjective row every element is reached from some element",
        default_order: 3,
        max_order: 3,
        check: prop_5_5,
    },
    Theorem {
        id: "PROP_5_6",
        claim: "reachability between members of a divisible subgroupoid holds inside it",
        default_order: 3,
        max_order: 3,
        check: prop_5_6,
    },
    Theorem {
        id: "THM_5_7",
        claim: "a divisible subgroupoid of a right entire magma is right entire",
        default_order: 4,
        max_order: 4,
        check: thm_5_7,
    },
    Theorem {
        id: "PROP_5_8",
        claim: "a divisible subgroupoid of a right asymmetric magma is right asymmetric",
        default_order: 3,
        max_order: 3,
        check: prop_5_8,
    },
    Theorem {
        id: "PROP_5_9",
        claim: "every subgroup of a group is divisible",
        default_order: 3,
        max_order: 3,
        check: prop_5_9,
    },
    Theorem {
        id: "SEC2_LEFTZERO_ID",
        claim: "the left zero magma is a two-sided identity for the binary-system product",
        default_order: 3,
        max_order: 3,
        check: sec2_leftzero_id,
    },
    Theorem {
        id: "SEC2_LEFTOID_COMP",
        claim: "the binary-system product of leftoids over f and g is the leftoid over g after f",
        default_order: 4,
        max_order: 4,
        check: sec2_leftoid_comp,
    },
    Theorem {
        id: "SEC2_CONSTANT_ISO",
        claim: "constant magmas of the same order are isomorphic",
        default_order: 8,
        max_order: 8,
        check: sec2_constant_iso,
    },
    Theorem {
        id: "SEC2_CENTER_PAIR",
        claim: "a central binary system maps each pair of distinct elements onto itself",
        default_order: 3,
        max_order: 3,
        check: sec2_center_pair,
    },
    Theorem {
        id: "SEC2_K1K2",
        claim: "magmas with a left-absorbing zero and a right-identity-forcing element are trivial",
        default_order: 3,
        max_order: 3,
        check: sec2_k1k2,
    },
    Theorem {
        id: "SEC2_LEFTOID_RIGHTOID",
        claim: "magmas that are both leftoids and rightoids are constant, one class up to isomorphism",
        default_order: 3,
        max_order: 3,
        check: sec2_leftoid_rightoid,
    },
    Theorem {
        id: "EX_3_1_ANALOG",
        claim: "averaging modulo an odd number is right feeble but not associative",
        default_order: 8,
        max_order: 8,
        check: ex_3_1_analog,
    },
    Theorem {
        id: "EX_3_2_ANALOG",
        claim: "affine operations over prime fields are right feeble",
        default_order: 8,
        max_order: 8,
        check: ex_3_2_analog,
    },
    Theorem {
        id: "EX_3_8_ANALOG",
        claim: "capped addition on 0..k is not right feeble for k >= 1",
        default_order: 8,
        max_order: 8,
        check: ex_3_8_analog,
    },
    Theorem {
        id: "EX_3_9_ANALOG",
        claim: "units are divisible under modular multiplication; even residues mod 6 are not",
        default_order: 8,
        max_order: 8,
        check: ex_3_9_analog,
    },
    Theorem {
        id: "EX_4_5_ANALOG",
        claim: "capped addition on 0..k is right asymmetric",
        default_order: 8,
        max_order: 8,
        check: ex_4_5_analog,
    },
];
