//! Search in `S3 wr Z4` for a non-nilpotent group generated by two mutually
//! 3-Engel elements of order 4 whose `γ_4` is abelian, and for a mutually
//! 4-Engel generating pair of the whole wreath product.

use alloc::vec::Vec;

use super::Executor;
use crate::{
    commutator::{left_normed, mutual_engel, MutualEngel},
    group::{EnumerationCap, Group},
    perm::Permutation,
    series, Result,
};

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WreathPair {
    pub x: Permutation,
    pub y: Permutation,
    pub order_x: u128,
    pub order_y: u128,
    pub degrees: MutualEngel,
    /// Order of `x y⁻¹`.
    pub order_x_y_inv: u128,
    pub span_order: u128,
    pub span_nilpotent: bool,
    pub span_lower_central_orders: Vec<u128>,
    pub sylow2_order: u128,
    pub sylow2_class: Option<usize>,
    pub gamma3_abelian: bool,
    pub gamma4_abelian: bool,
}

impl WreathPair {
    fn evaluate(x: &Permutation, y: &Permutation, degree: usize, cap: EnumerationCap) -> Result<Self> {
        let span = Group::generated_by(degree, [x, y]);
        let lower = series::lower_central(&span);
        let sylow2 = span.sylow_subgroup(2, cap)?;
        Ok(Self {
            x: x.clone(),
            y: y.clone(),
            order_x: x.order(),
            order_y: y.order(),
            degrees: mutual_engel(x, y),
            order_x_y_inv: x.compose(&y.inverse()).order(),
            span_order: span.order(),
            span_nilpotent: lower.report.terminated_trivial,
            span_lower_central_orders: lower.report.subgroup_orders.clone(),
            sylow2_order: sylow2.order(),
            sylow2_class: series::nilpotency_class(&sylow2),
            gamma3_abelian: lower.term(3).is_abelian(),
            gamma4_abelian: lower.term(4).is_abelian(),
        })
    }

    /// All properties of the pair reported for `S3 wr Z4`.
    pub fn matches_target(&self) -> bool {
        self.order_x == 4
            && self.order_y == 4
            && self.degrees.within(3)
            && self.order_x_y_inv == 6
            && !self.span_nilpotent
            && self.span_order == 2592
            && self.sylow2_order == 32
            && self.sylow2_class == Some(3)
            && self.gamma4_abelian
            && !self.gamma3_abelian
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GeneratingPair {
    pub x: Permutation,
    pub y: Permutation,
    pub order_y: u128,
    /// `[x, _3 y] = 1`.
    pub x_3_y_trivial: bool,
    /// `[y, _4 x] = 1`.
    pub y_4_x_trivial: bool,
    pub degrees: MutualEngel,
    pub span_order: u128,
}

impl GeneratingPair {
    pub fn matches_target(&self, ambient_order: u128) -> bool {
        self.order_y == 6 && self.x_3_y_trivial && self.y_4_x_trivial && self.span_order == ambient_order
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WreathPairReport {
    pub ambient_order: u128,
    /// Order-4 class representatives tried for `x`.
    pub x_classes_scanned: usize,
    /// Pairs passing the cheap filters (orders, Engel degrees, `o(xy⁻¹)`).
    pub prefiltered_pairs: usize,
    /// First pair in enumeration order with every target property.
    pub pair: Option<WreathPair>,
    pub matching_pairs: usize,
    pub generating_pair: Option<GeneratingPair>,
}

impl WreathPairReport {
    pub fn found_all(&self) -> bool {
        self.pair.as_ref().is_some_and(WreathPair::matches_target)
            && self.generating_pair.as_ref().is_some_and(|g| g.matches_target(self.ambient_order))
    }
}

/// Scans `x` over order-4 conjugacy class representatives and `y` over all
/// order-4 elements. Conjugating a pair preserves every property checked,
/// so class representatives for `x` lose nothing.
pub fn find_wreath_engel_pair<E: Executor>(group: &Group, cap: EnumerationCap, exec: &E) -> Result<WreathPairReport> {
    let elements = group.elements(cap)?;
    let degree = group.degree();
    let xs: Vec<Permutation> =
        group.conjugacy_classes(cap)?.into_iter().map(|c| c.representative).filter(|x| x.order() == 4).collect();
    let order4: Vec<&Permutation> = elements.iter().filter(|y| y.order() == 4).collect();

    let mut prefiltered = Vec::new();
    for x in &xs {
        let keep = exec.map(&order4, |y| {
            left_normed(x, y, 3).is_identity()
                && left_normed(y, x, 3).is_identity()
                && x.compose(&y.inverse()).order() == 6
        });
        prefiltered.extend(order4.iter().zip(keep).filter(|(_, k)| *k).map(|(y, _)| (x.clone(), (*y).clone())));
    }
    let evaluated = exec.map(&prefiltered, |(x, y)| WreathPair::evaluate(x, y, degree, cap));
    let evaluated: Vec<WreathPair> = evaluated.into_iter().collect::<Result<_>>()?;
    let matching: Vec<&WreathPair> = evaluated.iter().filter(|p| p.matches_target()).collect();
    let pair = matching.first().map(|p| (*p).clone());

    // prefer the x of the main pair, then the other order-4 classes
    let mut x_order: Vec<Permutation> = pair.iter().map(|p| p.x.clone()).collect();
    x_order.extend(xs.iter().filter(|x| Some(*x) != pair.as_ref().map(|p| &p.x)).cloned());
    let order6: Vec<&Permutation> = elements.iter().filter(|y| y.order() == 6).collect();
    let mut generating_pair = None;
    for x in &x_order {
        let found = exec.map(&order6, |y| {
            left_normed(x, y, 3).is_identity()
                && left_normed(y, x, 4).is_identity()
                && Group::generated_by(degree, [x, *y]).order() == group.order()
        });
        if let Some((y, _)) = order6.iter().zip(found).find(|(_, ok)| *ok) {
            generating_pair = Some(GeneratingPair {
                x: x.clone(),
                y: (*y).clone(),
                order_y: y.order(),
                x_3_y_trivial: true,
                y_4_x_trivial: true,
                degrees: mutual_engel(x, y),
                span_order: group.order(),
            });
            break;
        }
    }

    Ok(WreathPairReport {
        ambient_order: group.order(),
        x_classes_scanned: xs.len(),
        prefiltered_pairs: prefiltered.len(),
        matching_pairs: matching.len(),
        pair,
        generating_pair,
    })
}
