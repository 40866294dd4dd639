//! Nilpotency criteria for groups generated by Engel sets, checked on every
//! instance a finite group offers.
//!
//! Pairs `(x, y)` are enumerated up to simultaneous conjugation: `x` runs
//! over conjugacy class representatives and `y` over orbit representatives
//! of `C_G(x)`. Every hypothesis and conclusion below is invariant under
//! conjugation, so no instance is lost. Criteria stated for arbitrary
//! finite Engel sets are also checked on each group's own generating set.

use alloc::{
    format,
    string::{String, ToString},
    vec,
    vec::Vec,
};
use core::{cell::OnceCell, fmt, str::FromStr};

use super::{span::pair_classes, Executor};
use crate::{
    commutator::{comm_seq, engel_degree},
    construct::ConstructionSpec,
    error::ParseError,
    group::{prime_divisors, EnumerationCap, Group},
    perm::{gcd, Permutation},
    series::{self, Series},
    Result,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum TheoremId {
    /// Metabelian group generated by an Engel set `{x_1..x_r}` with all
    /// `[x_i, _n x_j] = 1`: class at most `(n - 1) r + 2`.
    Lemma22Bound,
    /// Nilpotent-by-abelian and generated by a finite Engel set: nilpotent.
    Thm23,
    /// `[x, y, y] = 1` and `[y, x, x, x] = 1`: `⟨x, y⟩` has class at most 3.
    Prop32,
    /// Abelian-by-(class 2) and generated by two mutually Engel elements:
    /// nilpotent.
    Thm37,
    /// As `Thm37` with mutually 3-Engel generators: class at most 8.
    Class8,
    /// Abelian-by-(class 2), generated by a finite Engel set whose elements
    /// have order prime to 6: nilpotent.
    CorCoprime6,
    /// Soluble, generated by two mutually Engel elements, every Sylow
    /// subgroup of class at most 2: nilpotent.
    CorSylow,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] =
        [Self::Lemma22Bound, Self::Thm23, Self::Prop32, Self::Thm37, Self::Class8, Self::CorCoprime6, Self::CorSylow];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Lemma22Bound => "lemma22_bound",
            Self::Thm23 => "thm23",
            Self::Prop32 => "prop32",
            Self::Thm37 => "thm37",
            Self::Class8 => "class8",
            Self::CorCoprime6 => "cor_coprime6",
            Self::CorSylow => "cor_sylow",
        }
    }

    /// Whether the criterion is about arbitrary finite Engel sets rather
    /// than pairs.
    fn applies_to_sets(&self) -> bool {
        matches!(self, Self::Lemma22Bound | Self::Thm23 | Self::CorCoprime6)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s.trim())
            .ok_or_else(|| ParseError::BadParameter { name: "theorem".into(), message: format!("unknown id `{s}`") })
    }
}

/// A hypothesis-satisfying instance whose conclusion failed.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Violation {
    pub theorem_id: TheoremId,
    pub group: String,
    pub elements: Vec<Permutation>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GroupTally {
    pub group: String,
    pub order: u128,
    pub instances_checked: usize,
    pub hypothesis_satisfied: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TheoremScanReport {
    pub theorem_id: TheoremId,
    pub instances_checked: usize,
    pub hypothesis_satisfied: usize,
    pub violations: Vec<Violation>,
    pub per_group: Vec<GroupTally>,
    pub notes: Vec<String>,
}

/// D16, D32, S4, S5, Z2 wr Z4 and S3 wr Z4.
pub fn default_corpus() -> Vec<ConstructionSpec> {
    use ConstructionSpec::*;
    vec![
        Dihedral2Pow(3),
        Dihedral2Pow(4),
        Symmetric(4),
        Symmetric(5),
        ConstructionSpec::wreath(Cyclic(2), Cyclic(4)),
        ConstructionSpec::wreath(Symmetric(3), Cyclic(4)),
    ]
}

/// `(p, class of a Sylow p-subgroup)` for each prime divisor.
type SylowClasses = Vec<(u64, Option<usize>)>;

/// Lazily computed facts about one instance `S` and its span `⟨S⟩`.
struct Facts<'a> {
    set: &'a [Permutation],
    degree: usize,
    cap: EnumerationCap,
    degrees: OnceCell<Vec<Vec<Option<usize>>>>,
    span: OnceCell<Group>,
    lower: OnceCell<Series>,
    derived_nilpotent: OnceCell<bool>,
    soluble: OnceCell<bool>,
    metabelian: OnceCell<bool>,
    sylow_classes: OnceCell<Result<SylowClasses>>,
}

impl<'a> Facts<'a> {
    fn new(set: &'a [Permutation], degree: usize, cap: EnumerationCap) -> Self {
        Self {
            set,
            degree,
            cap,
            degrees: OnceCell::new(),
            span: OnceCell::new(),
            lower: OnceCell::new(),
            derived_nilpotent: OnceCell::new(),
            soluble: OnceCell::new(),
            metabelian: OnceCell::new(),
            sylow_classes: OnceCell::new(),
        }
    }

    fn degrees(&self) -> &Vec<Vec<Option<usize>>> {
        self.degrees
            .get_or_init(|| self.set.iter().map(|a| self.set.iter().map(|b| engel_degree(a, b)).collect()).collect())
    }

    fn is_engel_set(&self) -> bool {
        self.degrees().iter().flatten().all(Option::is_some)
    }

    /// Largest pairwise degree, when `S` is an Engel set.
    fn max_degree(&self) -> Option<usize> {
        self.degrees().iter().flatten().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// `(n(x, y), n(y, x))` for a pair.
    fn mutual(&self) -> (Option<usize>, Option<usize>) {
        let d = self.degrees();
        (d[0][1], d[1][0])
    }

    fn span(&self) -> &Group {
        self.span.get_or_init(|| Group::generated_by(self.degree, self.set))
    }

    fn lower(&self) -> &Series {
        self.lower.get_or_init(|| series::lower_central(self.span()))
    }

    fn class(&self) -> Option<usize> {
        self.lower().report.class_or_length
    }

    fn derived_nilpotent(&self) -> bool {
        *self.derived_nilpotent.get_or_init(|| series::is_nilpotent_by_abelian(self.span()))
    }

    fn soluble(&self) -> bool {
        *self.soluble.get_or_init(|| self.class().is_some() || series::is_soluble(self.span()))
    }

    fn metabelian(&self) -> bool {
        *self.metabelian.get_or_init(|| series::is_metabelian(self.span()))
    }

    fn gamma3_abelian(&self) -> bool {
        self.lower().term(3).is_abelian()
    }

    fn sylow_classes(&self) -> Result<&SylowClasses> {
        self.sylow_classes
            .get_or_init(|| {
                let span = self.span();
                prime_divisors(span.order())
                    .into_iter()
                    .map(|p| Ok((p, series::nilpotency_class(&span.sylow_subgroup(p, self.cap)?))))
                    .collect()
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn describe_class(&self) -> String {
        match self.class() {
            Some(c) => format!("span of order {} has class {c}", self.span().order()),
            None => format!(
                "span of order {} is not nilpotent (lower central orders {:?})",
                self.span().order(),
                self.lower().report.subgroup_orders
            ),
        }
    }
}

/// Outcome of one theorem on one instance.
struct Verdict {
    hypothesis: bool,
    violation: Option<String>,
}

impl Verdict {
    fn skip() -> Self {
        Self { hypothesis: false, violation: None }
    }
}

fn check(id: TheoremId, facts: &Facts<'_>, is_pair: bool) -> Result<Verdict> {
    if !is_pair && !id.applies_to_sets() {
        return Ok(Verdict::skip());
    }
    let nilpotent_or = |f: &Facts<'_>| f.class().is_none().then(|| f.describe_class());
    let verdict = match id {
        TheoremId::Prop32 => {
            let (x, y) = (&facts.set[0], &facts.set[1]);
            let hypothesis = comm_seq(&[x, y, y]).is_identity() && comm_seq(&[y, x, x, x]).is_identity();
            let violation = (hypothesis && !facts.class().is_some_and(|c| c <= 3)).then(|| facts.describe_class());
            Verdict { hypothesis, violation }
        }
        TheoremId::Thm37 => {
            let (n, m) = facts.mutual();
            let hypothesis = n.is_some() && m.is_some() && facts.gamma3_abelian();
            Verdict { hypothesis, violation: if hypothesis { nilpotent_or(facts) } else { None } }
        }
        TheoremId::Class8 => {
            let (n, m) = facts.mutual();
            let hypothesis = n.is_some_and(|n| n <= 3) && m.is_some_and(|m| m <= 3) && facts.gamma3_abelian();
            let violation = (hypothesis && !facts.class().is_some_and(|c| c <= 8)).then(|| facts.describe_class());
            Verdict { hypothesis, violation }
        }
        TheoremId::Thm23 => {
            let hypothesis = facts.is_engel_set() && facts.derived_nilpotent();
            Verdict { hypothesis, violation: if hypothesis { nilpotent_or(facts) } else { None } }
        }
        TheoremId::CorCoprime6 => {
            let hypothesis =
                facts.set.iter().all(|e| gcd(e.order(), 6) == 1) && facts.is_engel_set() && facts.gamma3_abelian();
            Verdict { hypothesis, violation: if hypothesis { nilpotent_or(facts) } else { None } }
        }
        TheoremId::CorSylow => {
            let (n, m) = facts.mutual();
            let hypothesis = n.is_some()
                && m.is_some()
                && facts.soluble()
                && facts.sylow_classes()?.iter().all(|(_, c)| c.is_some_and(|c| c <= 2));
            Verdict { hypothesis, violation: if hypothesis { nilpotent_or(facts) } else { None } }
        }
        TheoremId::Lemma22Bound => {
            let hypothesis = facts.is_engel_set() && facts.metabelian();
            let violation = if hypothesis {
                let n = facts.max_degree().unwrap_or(0).max(1);
                let mut distinct = facts.set.to_vec();
                distinct.sort_unstable();
                distinct.dedup();
                let bound = (n - 1) * distinct.len() + 2;
                (!facts.class().is_some_and(|c| c <= bound)).then(|| {
                    format!("{}; bound (n-1)r+2 = {bound} with n = {n}, r = {}", facts.describe_class(), distinct.len())
                })
            } else {
                None
            };
            Verdict { hypothesis, violation }
        }
    };
    Ok(verdict)
}

pub fn theorem_scan<E: Executor>(
    corpus: &[ConstructionSpec],
    id: TheoremId,
    cap: EnumerationCap,
    exec: &E,
) -> Result<TheoremScanReport> {
    Ok(theorem_scan_many(corpus, &[id], cap, exec)?.remove(0))
}

struct Instance {
    group: usize,
    set: Vec<Permutation>,
    is_pair: bool,
}

/// Scans several criteria in one pass so that span computations are shared.
/// Reports come back in the order of `ids`.
pub fn theorem_scan_many<E: Executor>(
    corpus: &[ConstructionSpec],
    ids: &[TheoremId],
    cap: EnumerationCap,
    exec: &E,
) -> Result<Vec<TheoremScanReport>> {
    let groups: Vec<Group> = corpus.iter().map(ConstructionSpec::build).collect::<Result<_>>()?;
    let mut instances = Vec::new();
    for (gi, group) in groups.iter().enumerate() {
        let elements = group.elements(cap)?;
        for class in pair_classes(group, cap, |_| true, elements)? {
            for y in class.ys {
                instances.push(Instance { group: gi, set: vec![class.x.clone(), y], is_pair: true });
            }
        }
        let gens: Vec<Permutation> = group.nontrivial_generators().cloned().collect();
        if !gens.is_empty() {
            instances.push(Instance { group: gi, set: gens, is_pair: false });
        }
    }

    let verdicts = exec.map(&instances, |inst| -> Result<Vec<Verdict>> {
        let facts = Facts::new(&inst.set, groups[inst.group].degree(), cap);
        ids.iter().map(|id| check(*id, &facts, inst.is_pair)).collect()
    });
    let verdicts: Vec<Vec<Verdict>> = verdicts.into_iter().collect::<Result<_>>()?;

    let mut reports = Vec::new();
    for (k, id) in ids.iter().enumerate() {
        let mut per_group: Vec<GroupTally> = corpus
            .iter()
            .zip(&groups)
            .map(|(spec, g)| GroupTally {
                group: spec.to_string(),
                order: g.order(),
                instances_checked: 0,
                hypothesis_satisfied: 0,
            })
            .collect();
        let mut violations = Vec::new();
        for (inst, v) in instances.iter().zip(&verdicts) {
            if !inst.is_pair && !id.applies_to_sets() {
                continue;
            }
            let tally = &mut per_group[inst.group];
            tally.instances_checked += 1;
            if v[k].hypothesis {
                tally.hypothesis_satisfied += 1;
            }
            if let Some(detail) = &v[k].violation {
                violations.push(Violation {
                    theorem_id: *id,
                    group: corpus[inst.group].to_string(),
                    elements: inst.set.clone(),
                    detail: detail.clone(),
                });
            }
        }
        let mut notes = vec![String::from(
            "pairs (x, y) enumerated up to simultaneous conjugation: x over class representatives, y over centralizer orbits",
        )];
        if id.applies_to_sets() {
            notes.push(String::from("each group's generating set is checked as an additional Engel-set instance"));
        }
        reports.push(TheoremScanReport {
            theorem_id: *id,
            instances_checked: per_group.iter().map(|t| t.instances_checked).sum(),
            hypothesis_satisfied: per_group.iter().map(|t| t.hypothesis_satisfied).sum(),
            violations,
            per_group,
            notes,
        });
    }
    Ok(reports)
}
