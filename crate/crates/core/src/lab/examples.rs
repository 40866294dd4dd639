//! Reproduction batteries for the three worked examples: the dihedral
//! 2-groups, `S3 wr Z4`, and the `S8` pair.

use alloc::{
    boxed::Box,
    format,
    string::{String, ToString},
    vec,
    vec::Vec,
};
use core::{fmt, str::FromStr};

use super::{find_wreath_engel_pair, Executor, WreathPairReport};
use crate::{
    commutator::{left_normed, mutual_engel, MutualEngel},
    construct::{dihedral_engel_table, ConstructionSpec, DihedralTable},
    error::ParseError,
    group::{EnumerationCap, Group},
    perm::Permutation,
    series, Result,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleId {
    Dihedral(u32),
    Wreath,
    S8,
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Dihedral(n) => write!(f, "dihedral({n})"),
            Self::Wreath => f.write_str("wreath"),
            Self::S8 => f.write_str("s8"),
        }
    }
}

impl FromStr for ExampleId {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        match t.as_str() {
            "wreath" => return Ok(Self::Wreath),
            "s8" => return Ok(Self::S8),
            _ => {}
        }
        let bad = || ParseError::BadParameter {
            name: "example".into(),
            message: format!("expected dihedral(n), wreath or s8, got `{s}`"),
        };
        let inner = t.strip_prefix("dihedral(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let n: u32 = inner.parse().map_err(|_| bad())?;
        ConstructionSpec::Dihedral2Pow(n).validate()?;
        Ok(Self::Dihedral(n))
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for ExampleId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One pinned fact: expected and observed values rendered as text.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Self { name: name.into(), pass: expected == actual, expected, actual }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ExampleDetails {
    Dihedral { table: DihedralTable, degrees_x_y: MutualEngel, degrees_y_z: MutualEngel },
    Wreath { lower_central_q: Vec<u128>, search: Box<WreathPairReport> },
    S8 { x: Permutation, y: Permutation, x_table: Vec<Permutation>, y_table: Vec<Permutation>, xy: Permutation },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExampleReport {
    pub id: ExampleId,
    pub group: String,
    pub checks: Vec<Check>,
    pub details: ExampleDetails,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn show_degree(d: Option<usize>) -> String {
    d.map_or_else(|| String::from("none"), |d| d.to_string())
}

fn show_pair(m: &MutualEngel) -> String {
    format!("({}, {})", show_degree(m.forward), show_degree(m.backward))
}

pub fn reproduce_example<E: Executor>(id: ExampleId, cap: EnumerationCap, exec: &E) -> Result<ExampleReport> {
    match id {
        ExampleId::Dihedral(n) => dihedral(n),
        ExampleId::Wreath => wreath(cap, exec),
        ExampleId::S8 => s8(),
    }
}

fn dihedral(n: u32) -> Result<ExampleReport> {
    let spec = ConstructionSpec::Dihedral2Pow(n);
    let group = spec.build()?;
    let table = dihedral_engel_table(n)?;
    let degrees_x_y = mutual_engel(&table.x, &table.y);
    let degrees_y_z = mutual_engel(&table.y, &table.z);
    let span_yz = Group::generated_by(group.degree(), [&table.y, &table.z]);
    let mut checks = vec![
        Check::new("order", 1u128 << (n + 1), group.order()),
        Check::new("order of z", 1u128 << n, table.z.order()),
        Check::new("[x,y] = z^2", true, table.commutator_is_z_squared),
        Check::new("z^x = z^y = z^-1", true, table.reflections_invert_z),
    ];
    for row in &table.rows {
        checks.push(Check::new(format!("[x,_{} y] = z^(-(-2)^{})", row.k, row.k), true, row.x_k_matches_power));
        checks.push(Check::new(format!("[y,_{} x] = z^((-2)^{})", row.k, row.k), true, row.y_k_matches_power));
    }
    checks.extend([
        Check::new("degrees (x, y)", format!("({n}, {n})"), show_pair(&degrees_x_y)),
        Check::new("degrees (y, z)", format!("(2, {n})"), show_pair(&degrees_y_z)),
        Check::new("<y, z> = G", group.order(), span_yz.order()),
    ]);
    Ok(ExampleReport {
        id: ExampleId::Dihedral(n),
        group: spec.to_string(),
        checks,
        details: ExampleDetails::Dihedral { table, degrees_x_y, degrees_y_z },
    })
}

fn wreath<E: Executor>(cap: EnumerationCap, exec: &E) -> Result<ExampleReport> {
    use ConstructionSpec::*;
    let spec = ConstructionSpec::wreath(Symmetric(3), Cyclic(4));
    let w = spec.build()?;
    let q = ConstructionSpec::wreath(Cyclic(2), Cyclic(4)).build()?;
    let q_lower = series::lower_central(&q);
    // the 3-part is normal here, so it is the unique Sylow 3-subgroup
    let n3 = w.sylow_subgroup(3, cap)?;
    let s2 = w.sylow_subgroup(2, cap)?;
    let elementary = n3.is_abelian() && n3.generators().iter().all(|g| g.order() <= 3);
    let s2_lower = series::lower_central(&s2);
    let meet = n3.filter_subgroup(cap, |g| s2.has(g))?;
    let search = find_wreath_engel_pair(&w, cap, exec)?;

    let mut checks = vec![
        Check::new("|W|", 5184, w.order()),
        Check::new("|Z2 wr Z4|", 64, q.order()),
        Check::new("class of Z2 wr Z4", "4", show_degree(q_lower.report.class_or_length)),
        Check::new("|N|", 81, n3.order()),
        Check::new("N elementary abelian", true, elementary),
        Check::new("N normal in W", true, w.is_normal(&n3)?),
        Check::new("|Q|", 64, s2.order()),
        Check::new("Q meets N trivially", 1, meet.order()),
        Check::new(
            "Q and Z2 wr Z4 have equal lower central orders",
            format!("{:?}", q_lower.report.subgroup_orders),
            format!("{:?}", s2_lower.report.subgroup_orders),
        ),
    ];
    match &search.pair {
        Some(p) => checks.extend([
            Check::new("o(x), o(y)", "(4, 4)", format!("({}, {})", p.order_x, p.order_y)),
            Check::new("[x,_3 y] = [y,_3 x] = 1", true, p.degrees.within(3)),
            Check::new("o(xy^-1)", 6, p.order_x_y_inv),
            Check::new("|<x,y>|", 2592, p.span_order),
            Check::new("<x,y> nilpotent", false, p.span_nilpotent),
            Check::new("|S|", 32, p.sylow2_order),
            Check::new("class of S", "3", show_degree(p.sylow2_class)),
            Check::new("gamma_4 abelian", true, p.gamma4_abelian),
            Check::new("gamma_3 abelian", false, p.gamma3_abelian),
        ]),
        None => checks.push(Check::new("pair (x, y) found", true, false)),
    }
    match &search.generating_pair {
        Some(g) => checks.extend([
            Check::new("o(y')", 6, g.order_y),
            Check::new("[x,_3 y'] = 1", true, g.x_3_y_trivial),
            Check::new("[y',_4 x] = 1", true, g.y_4_x_trivial),
            Check::new("<x,y'> = W", w.order(), g.span_order),
        ]),
        None => checks.push(Check::new("pair (x, y') found", true, false)),
    }
    Ok(ExampleReport {
        id: ExampleId::Wreath,
        group: spec.to_string(),
        checks,
        details: ExampleDetails::Wreath { lower_central_q: q_lower.report.subgroup_orders, search: Box::new(search) },
    })
}

const S8_X_TABLE: [&str; 4] = ["(1,6)(2,7)(3,8)(4,5)", "(1,5)(4,6)", "(1,5)(2,3)(4,6)(7,8)", "()"];
const S8_Y_TABLE: [&str; 4] = ["(1,6)(2,7)(3,8)(4,5)", "(2,4)(5,7)", "(1,3)(2,4)(5,7)(6,8)", "()"];

fn s8() -> Result<ExampleReport> {
    let x = Permutation::parse("(1,2,3,4)(5,6)(7,8)", Some(8))?;
    let y = Permutation::parse("(1,3)(2,5)(4,7,6,8)", Some(8))?;
    let x_table: Vec<Permutation> = (1..=4).map(|k| left_normed(&x, &y, k)).collect();
    let y_table: Vec<Permutation> = (1..=4).map(|k| left_normed(&y, &x, k)).collect();
    let xy = x.compose(&y);
    let span = Group::generated_by(8, [&x, &y]);

    let mut checks = Vec::new();
    for (k, (got, want)) in x_table.iter().zip(S8_X_TABLE).enumerate() {
        checks.push(Check::new(format!("x_{}", k + 1), want, got.to_cycle_string()));
    }
    for (k, (got, want)) in y_table.iter().zip(S8_Y_TABLE).enumerate() {
        checks.push(Check::new(format!("y_{}", k + 1), want, got.to_cycle_string()));
    }
    checks.extend([
        Check::new("o(x), o(y)", "(4, 4)", format!("({}, {})", x.order(), y.order())),
        Check::new("xy", "(1,5,8,6,2)(3,7,4)", xy.to_cycle_string()),
        Check::new("o(xy)", 15, xy.order()),
        Check::new("|<x,y>|", 40320, span.order()),
        Check::new("<x,y> nilpotent", false, series::is_nilpotent(&span)),
    ]);
    Ok(ExampleReport {
        id: ExampleId::S8,
        group: ConstructionSpec::Symmetric(8).to_string(),
        checks,
        details: ExampleDetails::S8 { x, y, x_table, y_table, xy },
    })
}
