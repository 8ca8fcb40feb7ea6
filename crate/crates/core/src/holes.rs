//! Necessary conditions for hole-defined classes.
//!
//! A class is given by a set `C` of forbidden hole lengths (holes are induced
//! cycles of length at least 4). The cycles in the class are then
//! `cyc = {3} ∪ ([4, ∞) \ C)`. Infinite sets are represented by a bounded
//! sample plus a declared description of the tail; verdicts only ever apply a
//! known necessary condition to what is sampled or declared, and never guess
//! tail behaviour from the sample.
//!
//! Each condition carries a stable tag in reports:
//!
//! | tag             | condition                                                         | applies to   |
//! |-----------------|-------------------------------------------------------------------|--------------|
//! | `nec:multiples` | above some `M`, `k ∈ cyc` iff every multiple of `k` is in `cyc`   | both         |
//! | `nofiniteC`     | `cyc` is infinite (all paths are in every hole class)             | non-acyclic  |
//! | `sncondition`   | `cyc ∩ [M, ∞)` lies in `rZ+` and is cofinite there               | both         |
//! | `thm:main*`     | `C` is finite, cofinite, or eventually exactly the odd numbers    | acyclic      |
//! | `thm:main`      | `C` is finite or eventually exactly the odd numbers               | non-acyclic  |
//!
//! Passing every condition makes a class a candidate only; the conditions
//! are not known to be sufficient.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::automaton::gcd;
use crate::error::{Error, Result};
use crate::periods::{gcd_and_cofinite, DeclaredTail};

/// Smallest sampling bound accepted for custom classes.
pub const MIN_CUSTOM_BOUND: usize = 50;

/// Declared behaviour of a custom `C` beyond its sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleTail {
    /// `C` has no members beyond the sample.
    Finite,
    /// `C` contains every length from some point on.
    Cofinite,
    /// From some point on, `C` is exactly the odd lengths.
    OddTail,
    /// `C` is infinite and coinfinite, and not eventually the odd lengths.
    Other,
}

impl FromStr for HoleTail {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "finite" => Ok(HoleTail::Finite),
            "cofinite" => Ok(HoleTail::Cofinite),
            "odd_tail" | "odd-tail" => Ok(HoleTail::OddTail),
            "coinfinite" | "other" | "infinite-coinfinite-other" => Ok(HoleTail::Other),
            other => Err(Error::InvalidArgument(format!("unknown tail {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum HoleClassSpec {
    /// `C` is exactly this finite set.
    FiniteSet { lengths: BTreeSet<usize> },
    /// `C` is every length from 4 on except these.
    CofiniteComplement { excluded: BTreeSet<usize> },
    /// `C` is the odd lengths from `threshold` on, plus `exceptions`, which
    /// lie below the threshold.
    OddTail {
        threshold: usize,
        exceptions: BTreeSet<usize>,
    },
    /// `C ∩ [4, bound]` is `members`; beyond `bound`, `tail` describes it.
    Custom {
        members: BTreeSet<usize>,
        bound: usize,
        tail: HoleTail,
    },
}

impl HoleClassSpec {
    pub fn finite(lengths: impl IntoIterator<Item = usize>) -> Self {
        HoleClassSpec::FiniteSet {
            lengths: lengths.into_iter().collect(),
        }
    }

    pub fn cofinite(excluded: impl IntoIterator<Item = usize>) -> Self {
        HoleClassSpec::CofiniteComplement {
            excluded: excluded.into_iter().collect(),
        }
    }

    pub fn odd_tail(threshold: usize, exceptions: impl IntoIterator<Item = usize>) -> Self {
        HoleClassSpec::OddTail {
            threshold,
            exceptions: exceptions.into_iter().collect(),
        }
    }

    /// A custom class from a membership test sampled on `[4, bound]`.
    pub fn custom(bound: usize, tail: HoleTail, member: impl Fn(usize) -> bool) -> Result<Self> {
        if bound < MIN_CUSTOM_BOUND {
            return Err(Error::InvalidArgument(format!(
                "custom bound {bound} is below {MIN_CUSTOM_BOUND}"
            )));
        }
        Ok(HoleClassSpec::Custom {
            members: (4..=bound).filter(|&k| member(k)).collect(),
            bound,
            tail,
        })
    }

    /// Removes lengths below 4, which cannot be hole lengths, returning a
    /// warning for each.
    pub fn normalized(&self) -> (HoleClassSpec, Vec<String>) {
        let mut warnings = Vec::new();
        fn clamp(set: &BTreeSet<usize>, warnings: &mut Vec<String>) -> BTreeSet<usize> {
            for &k in set.iter().filter(|&&k| k < 4) {
                warnings.push(format!("length {k} ignored: holes have length at least 4"));
            }
            set.iter().copied().filter(|&k| k >= 4).collect()
        }
        let spec = match self {
            HoleClassSpec::FiniteSet { lengths } => HoleClassSpec::FiniteSet {
                lengths: clamp(lengths, &mut warnings),
            },
            HoleClassSpec::CofiniteComplement { excluded } => HoleClassSpec::CofiniteComplement {
                excluded: clamp(excluded, &mut warnings),
            },
            HoleClassSpec::OddTail {
                threshold,
                exceptions,
            } => {
                if *threshold < 4 {
                    warnings.push(format!("odd-tail threshold {threshold} raised to 4"));
                }
                HoleClassSpec::OddTail {
                    threshold: (*threshold).max(4),
                    exceptions: clamp(exceptions, &mut warnings),
                }
            }
            HoleClassSpec::Custom {
                members,
                bound,
                tail,
            } => HoleClassSpec::Custom {
                members: clamp(members, &mut warnings),
                bound: *bound,
                tail: *tail,
            },
        };
        (spec, warnings)
    }

    /// Whether `k` is a forbidden hole length, when the spec determines it.
    pub fn forbids(&self, k: usize) -> Option<bool> {
        if k < 4 {
            return Some(false);
        }
        match self {
            HoleClassSpec::FiniteSet { lengths } => Some(lengths.contains(&k)),
            HoleClassSpec::CofiniteComplement { excluded } => Some(!excluded.contains(&k)),
            HoleClassSpec::OddTail {
                threshold,
                exceptions,
            } => Some(if k >= *threshold {
                k % 2 == 1
            } else {
                exceptions.contains(&k)
            }),
            HoleClassSpec::Custom { members, bound, .. } => (k <= *bound).then(|| members.contains(&k)),
        }
    }

    /// Largest length whose membership is known exactly.
    pub fn sample_bound(&self) -> Option<usize> {
        match self {
            HoleClassSpec::Custom { bound, .. } => Some(*bound),
            _ => None,
        }
    }

    fn shape(&self) -> HoleTail {
        match self {
            HoleClassSpec::FiniteSet { .. } => HoleTail::Finite,
            HoleClassSpec::CofiniteComplement { .. } => HoleTail::Cofinite,
            HoleClassSpec::OddTail { .. } => HoleTail::OddTail,
            HoleClassSpec::Custom { tail, .. } => *tail,
        }
    }

    /// What is known about `cyc` beyond the sample.
    fn cycle_tail(&self) -> DeclaredTail {
        match self.shape() {
            HoleTail::Finite => DeclaredTail::CofiniteMultiples(1),
            HoleTail::OddTail => DeclaredTail::CofiniteMultiples(2),
            HoleTail::Cofinite => DeclaredTail::Finite,
            HoleTail::Other => DeclaredTail::Coinfinite,
        }
    }

    fn cycles_finite(&self) -> bool {
        self.shape() == HoleTail::Cofinite
    }
}

/// Parses the `key=value` spec format, e.g. `variant=odd_tail M=5`.
///
/// Keys: `variant` (`finite`, `cofinite`, `odd_tail`, `custom`), `members`
/// (comma-separated lengths; a trailing `...` is allowed for custom specs),
/// `excluded` (cofinite), `M` and `exceptions` (odd tail), `bound`, `tail`
/// and `rule` (custom; `rule` is one of `primes`, `even`, `odd`,
/// `multiples:K` and replaces `members`). `#` starts a comment.
pub fn parse_hole_spec(text: &str) -> Result<HoleClassSpec> {
    let mut pairs: Vec<(usize, String, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        for token in content.split_whitespace() {
            let (k, v) = token
                .split_once('=')
                .ok_or_else(|| Error::parse(idx + 1, format!("expected key=value, found {token:?}")))?;
            if pairs.iter().any(|(_, seen, _)| seen == k) {
                return Err(Error::parse(idx + 1, format!("duplicate key {k:?}")));
            }
            pairs.push((idx + 1, k.to_string(), v.to_string()));
        }
    }
    let get = |key: &str| pairs.iter().find(|(_, k, _)| k == key).map(|(l, _, v)| (*l, v.as_str()));
    let list = |key: &str, allow_ellipsis: bool| -> Result<BTreeSet<usize>> {
        let Some((line, value)) = get(key) else {
            return Ok(BTreeSet::new());
        };
        let mut out = BTreeSet::new();
        for item in value.split(',').filter(|s| !s.is_empty()) {
            if allow_ellipsis && item == "..." {
                continue;
            }
            out.insert(
                item.parse()
                    .map_err(|_| Error::parse(line, format!("{key}: expected a length, found {item:?}")))?,
            );
        }
        Ok(out)
    };
    let number = |key: &str| -> Result<Option<usize>> {
        get(key)
            .map(|(line, v)| {
                v.parse()
                    .map_err(|_| Error::parse(line, format!("{key}: expected a number, found {v:?}")))
            })
            .transpose()
    };
    let (vline, variant) = get("variant").ok_or_else(|| Error::parse(1, "missing variant"))?;
    let allowed: &[&str] = match variant {
        "finite" => &["variant", "members"],
        "cofinite" => &["variant", "excluded"],
        "odd_tail" => &["variant", "M", "exceptions"],
        "custom" => &["variant", "members", "bound", "tail", "rule"],
        other => return Err(Error::parse(vline, format!("unknown variant {other:?}"))),
    };
    if let Some((line, key, _)) = pairs.iter().find(|(_, k, _)| !allowed.contains(&k.as_str())) {
        return Err(Error::parse(*line, format!("key {key:?} does not apply to variant {variant}")));
    }
    Ok(match variant {
        "finite" => HoleClassSpec::FiniteSet {
            lengths: list("members", false)?,
        },
        "cofinite" => HoleClassSpec::CofiniteComplement {
            excluded: list("excluded", false)?,
        },
        "odd_tail" => HoleClassSpec::OddTail {
            threshold: number("M")?.ok_or_else(|| Error::parse(vline, "odd_tail needs M"))?,
            exceptions: list("exceptions", false)?,
        },
        _ => {
            let (tline, tail) = get("tail").ok_or_else(|| Error::parse(vline, "custom specs must declare a tail"))?;
            let tail: HoleTail = tail.parse().map_err(|e: Error| Error::parse(tline, e.to_string()))?;
            let members = list("members", true)?;
            let bound = number("bound")?.unwrap_or(MIN_CUSTOM_BOUND.max(members.last().copied().unwrap_or(0)));
            if bound < MIN_CUSTOM_BOUND {
                return Err(Error::parse(vline, format!("custom bound must be at least {MIN_CUSTOM_BOUND}")));
            }
            match get("rule") {
                Some((line, rule)) => {
                    if get("members").is_some() {
                        return Err(Error::parse(line, "give either rule or members, not both"));
                    }
                    let test = membership_rule(rule).map_err(|e| Error::parse(line, e.to_string()))?;
                    HoleClassSpec::custom(bound, tail, test)?
                }
                None => {
                    if let Some(&k) = members.iter().find(|&&k| k > bound) {
                        return Err(Error::parse(vline, format!("member {k} exceeds bound {bound}")));
                    }
                    HoleClassSpec::Custom { members, bound, tail }
                }
            }
        }
    })
}

fn membership_rule(rule: &str) -> Result<Box<dyn Fn(usize) -> bool>> {
    Ok(match rule {
        "primes" => Box::new(is_prime),
        "even" => Box::new(|k| k % 2 == 0),
        "odd" => Box::new(|k| k % 2 == 1),
        _ => match rule.strip_prefix("multiples:").map(str::parse::<usize>) {
            Some(Ok(m)) if m >= 1 => Box::new(move |k| k % m == 0),
            _ => return Err(Error::InvalidArgument(format!("unknown rule {rule:?}"))),
        },
    })
}

pub fn is_prime(k: usize) -> bool {
    k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| !k.is_multiple_of(d))
}

/// `{3} ∪ {k ∈ [4, k_max] : k ∉ C}`.
pub fn cycles_in_class(spec: &HoleClassSpec, k_max: usize) -> Result<BTreeSet<usize>> {
    if k_max < 4 {
        return Err(Error::InvalidArgument(format!("k_max = {k_max} is below 4")));
    }
    if let Some(bound) = spec.sample_bound().filter(|&b| b < k_max) {
        return Err(Error::BoundExceeded {
            requested: k_max,
            bound,
        });
    }
    Ok(std::iter::once(3)
        .chain((4..=k_max).filter(|&k| !spec.forbids(k).expect("within the sample")))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Condition {
    #[serde(rename = "nec:multiples")]
    Multiples,
    #[serde(rename = "nofiniteC")]
    InfiniteCycles,
    #[serde(rename = "sncondition")]
    CouplingCofinite,
    #[serde(rename = "thm:main*")]
    AcyclicTrichotomy,
    #[serde(rename = "thm:main")]
    Dichotomy,
}

impl Condition {
    pub fn tag(self) -> &'static str {
        match self {
            Condition::Multiples => "nec:multiples",
            Condition::InfiniteCycles => "nofiniteC",
            Condition::CouplingCofinite => "sncondition",
            Condition::AcyclicTrichotomy => "thm:main*",
            Condition::Dichotomy => "thm:main",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AppliesTo {
    Both,
    NonAcyclic,
    Acyclic,
}

impl AppliesTo {
    fn covers(self, acyclic: bool) -> bool {
        match self {
            AppliesTo::Both => true,
            AppliesTo::NonAcyclic => !acyclic,
            AppliesTo::Acyclic => acyclic,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The sample and declared tail do not decide the condition.
    Unresolved,
    /// The condition's hypothesis does not hold.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `k` is a cycle length in the class but its multiple is not.
    Multiple { k: usize, multiple: usize },
    /// Cycle lengths in the class whose gcd is `gcd`.
    CoprimeLengths { lengths: Vec<usize>, gcd: usize },
    /// A threshold and modulus satisfying the condition on the sample.
    Threshold { m: usize, r: usize },
    /// The declared shape of `C`.
    DeclaredTail { tail: HoleTail },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckVerdict {
    pub condition: Condition,
    pub applies_to: AppliesTo,
    pub status: Status,
    pub witness: Option<Witness>,
    pub reason: String,
}

/// Default sampling bound for analyses.
pub const DEFAULT_HOLE_KMAX: usize = 50;

fn verdict(condition: Condition, applies_to: AppliesTo, status: Status, witness: Option<Witness>, reason: String) -> CheckVerdict {
    CheckVerdict {
        condition,
        applies_to,
        status,
        witness,
        reason,
    }
}

/// Some threshold `M <= k_max / 3` makes the sampled cycle lengths from `M`
/// on closed under taking multiples.
pub fn check_multiples_closure(spec: &HoleClassSpec, k_max: usize) -> Result<CheckVerdict> {
    let c = Condition::Multiples;
    if spec.cycles_finite() {
        return Ok(verdict(
            c,
            AppliesTo::Both,
            Status::NotApplicable,
            Some(Witness::DeclaredTail { tail: spec.shape() }),
            "only finitely many cycles are in the class".into(),
        ));
    }
    let cyc = cycles_in_class(spec, k_max)?;
    let violation_from = |m: usize| -> Option<(usize, usize)> {
        cyc.range(m..).find_map(|&k| {
            (2..)
                .map(|l| l * k)
                .take_while(|&lk| lk <= k_max)
                .find(|lk| !cyc.contains(lk))
                .map(|lk| (k, lk))
        })
    };
    let top = (k_max / 3).max(4);
    for m in 4..=top {
        if violation_from(m).is_none() {
            return Ok(verdict(
                c,
                AppliesTo::Both,
                Status::Pass,
                Some(Witness::Threshold { m, r: 0 }),
                format!("cycle lengths from {m} to {k_max} are closed under multiples"),
            ));
        }
    }
    let (k, multiple) = violation_from(4).expect("every threshold failed");
    if spec.shape() != HoleTail::Other {
        // the declared tail makes the cycle lengths eventually closed, so the
        // threshold lies beyond the sample
        return Ok(verdict(
            c,
            AppliesTo::Both,
            Status::Unresolved,
            Some(Witness::Multiple { k, multiple }),
            format!("no threshold up to {top} works on the sample, but the declared tail is eventually closed; raise k_max"),
        ));
    }
    Ok(verdict(
        c,
        AppliesTo::Both,
        Status::Fail,
        Some(Witness::Multiple { k, multiple }),
        format!("C{k} is in the class but C{multiple} is not; every threshold up to {top} has such a pair"),
    ))
}

/// The class must contain infinitely many cycles, since it contains every
/// path. Only constrains expressions without acyclicity.
pub fn check_infinite_cycles(spec: &HoleClassSpec) -> CheckVerdict {
    let c = Condition::InfiniteCycles;
    if spec.cycles_finite() {
        verdict(
            c,
            AppliesTo::NonAcyclic,
            Status::Fail,
            Some(Witness::DeclaredTail { tail: spec.shape() }),
            "C is cofinite, so only finitely many cycles are in the class".into(),
        )
    } else {
        verdict(
            c,
            AppliesTo::NonAcyclic,
            Status::Pass,
            Some(Witness::DeclaredTail { tail: spec.shape() }),
            "C is coinfinite, so infinitely many cycles are in the class".into(),
        )
    }
}

/// Hole classes are closed under couplings, so the cycle lengths from some
/// `M` on must form a cofinite subset of `rZ+` for some `r`. Reports the
/// smallest such `M` consistent with the sample.
pub fn check_coupling_cofiniteness(spec: &HoleClassSpec, k_max: usize) -> Result<CheckVerdict> {
    let c = Condition::CouplingCofinite;
    if spec.cycles_finite() {
        return Ok(verdict(
            c,
            AppliesTo::Both,
            Status::NotApplicable,
            Some(Witness::DeclaredTail { tail: spec.shape() }),
            "only finitely many cycles are in the class".into(),
        ));
    }
    let cyc = cycles_in_class(spec, k_max)?;
    let top = (k_max / 3).max(4);
    let mut unresolved = None;
    for m in 4..=top {
        let sample: BTreeSet<usize> = cyc.range(m..).copied().collect();
        let v = gcd_and_cofinite(&sample, spec.cycle_tail());
        if v.cofinite {
            return Ok(verdict(
                c,
                AppliesTo::Both,
                Status::Pass,
                Some(Witness::Threshold { m, r: v.gcd_r }),
                format!("from {m} on the cycle lengths are cofinite in {}Z+ (M sample-derived)", v.gcd_r),
            ));
        }
        if spec.shape() == HoleTail::Other && v.gcd_r >= 2 && unresolved.is_none() {
            unresolved = Some((m, v.gcd_r));
        }
    }
    if let Some((m, r)) = unresolved {
        return Ok(verdict(
            c,
            AppliesTo::Both,
            Status::Unresolved,
            Some(Witness::Threshold { m, r }),
            format!("sampled lengths from {m} on lie in {r}Z+; the declared tail does not say whether they are cofinite there"),
        ));
    }
    if spec.shape() != HoleTail::Other {
        return Ok(verdict(
            c,
            AppliesTo::Both,
            Status::Unresolved,
            None,
            format!("no threshold up to {top} fits the sample, but the declared tail is cofinite in some rZ+; raise k_max"),
        ));
    }
    let lengths = coprime_pair(&cyc).unwrap_or_default();
    Ok(verdict(
        c,
        AppliesTo::Both,
        Status::Fail,
        Some(Witness::CoprimeLengths { lengths, gcd: 1 }),
        format!(
            "above every threshold up to {top} the sampled cycle lengths have gcd 1, so they would have to be cofinite in Z+; C is declared infinite, so they are not"
        ),
    ))
}

fn coprime_pair(cyc: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let tail: Vec<usize> = cyc.range(4..).copied().collect();
    for (i, &a) in tail.iter().enumerate() {
        for &b in &tail[i + 1..] {
            if gcd(a, b) == 1 {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// The shape of `C` itself: finite, cofinite (acyclic expressions only), or
/// eventually the odd lengths.
pub fn check_trichotomy(spec: &HoleClassSpec, acyclic: bool) -> CheckVerdict {
    let (condition, applies_to) = if acyclic {
        (Condition::AcyclicTrichotomy, AppliesTo::Acyclic)
    } else {
        (Condition::Dichotomy, AppliesTo::NonAcyclic)
    };
    let tail = spec.shape();
    let pass = match tail {
        HoleTail::Finite | HoleTail::OddTail => true,
        HoleTail::Cofinite => acyclic,
        HoleTail::Other => false,
    };
    let reason = match (tail, pass) {
        (HoleTail::Finite, _) => "C is finite".to_string(),
        (HoleTail::OddTail, _) => "C is eventually the odd lengths".to_string(),
        (HoleTail::Cofinite, true) => "C is cofinite".to_string(),
        (HoleTail::Cofinite, false) => "C is cofinite, which only acyclic expressions allow".to_string(),
        (HoleTail::Other, _) => "C is neither finite, cofinite, nor eventually the odd lengths".to_string(),
    };
    verdict(
        condition,
        applies_to,
        if pass { Status::Pass } else { Status::Fail },
        Some(Witness::DeclaredTail { tail }),
        reason,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Overall {
    /// Not expressible by forbidden orientations; the acyclic variant passes.
    NotExpressibleAny,
    /// Not expressible by forbidden orientations, acyclic or not.
    NotExpressibleAcyclic,
    /// Every necessary condition passes: a candidate, nothing more.
    NecessaryConditionsPass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantVerdict {
    Fails,
    Candidate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpressibilityReport {
    pub spec: HoleClassSpec,
    pub k_max: usize,
    pub cyc_sample: BTreeSet<usize>,
    pub verdicts: Vec<CheckVerdict>,
    pub acyclic: VariantVerdict,
    pub non_acyclic: VariantVerdict,
    pub overall: Overall,
    pub warnings: Vec<String>,
}

pub fn trichotomy_verdict(spec: &HoleClassSpec) -> Result<ExpressibilityReport> {
    let k_max = spec.sample_bound().unwrap_or(DEFAULT_HOLE_KMAX).min(DEFAULT_HOLE_KMAX);
    analyze(spec, k_max)
}

/// Runs every condition on the sample `[4, k_max]`.
pub fn analyze(spec: &HoleClassSpec, k_max: usize) -> Result<ExpressibilityReport> {
    if k_max < 12 {
        return Err(Error::InvalidArgument(format!("k_max = {k_max} is below 12")));
    }
    let (spec, warnings) = spec.normalized();
    let cyc_sample = cycles_in_class(&spec, k_max)?;
    let verdicts = vec![
        check_multiples_closure(&spec, k_max)?,
        check_infinite_cycles(&spec),
        check_coupling_cofiniteness(&spec, k_max)?,
        check_trichotomy(&spec, true),
        check_trichotomy(&spec, false),
    ];
    let fails = |acyclic: bool| {
        verdicts
            .iter()
            .any(|v| v.status == Status::Fail && v.applies_to.covers(acyclic))
    };
    let variant = |acyclic| {
        if fails(acyclic) {
            VariantVerdict::Fails
        } else {
            VariantVerdict::Candidate
        }
    };
    let (acyclic, non_acyclic) = (variant(true), variant(false));
    let overall = match (acyclic, non_acyclic) {
        (VariantVerdict::Fails, _) => Overall::NotExpressibleAcyclic,
        (VariantVerdict::Candidate, VariantVerdict::Fails) => Overall::NotExpressibleAny,
        _ => Overall::NecessaryConditionsPass,
    };
    Ok(ExpressibilityReport {
        spec,
        k_max,
        cyc_sample,
        verdicts,
        acyclic,
        non_acyclic,
        overall,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes() -> HoleClassSpec {
        HoleClassSpec::custom(60, HoleTail::Other, is_prime).unwrap()
    }

    fn even_holes() -> HoleClassSpec {
        HoleClassSpec::custom(60, HoleTail::Other, |k| k % 2 == 0).unwrap()
    }

    fn status(r: &ExpressibilityReport, c: Condition) -> Status {
        r.verdicts.iter().find(|v| v.condition == c).unwrap().status
    }

    #[test]
    fn cycle_samples() {
        assert_eq!(cycles_in_class(&primes(), 10).unwrap(), BTreeSet::from([3, 4, 6, 8, 9, 10]));
        let five = cycles_in_class(&HoleClassSpec::finite([5]), 9).unwrap();
        assert_eq!(five, BTreeSet::from([3, 4, 6, 7, 8, 9]));
        let odd = cycles_in_class(&HoleClassSpec::odd_tail(5, []), 12).unwrap();
        assert_eq!(odd, BTreeSet::from([3, 4, 6, 8, 10, 12]));
        assert!(cycles_in_class(&primes(), 61).is_err());
    }

    #[test]
    fn multiples_condition() {
        let v = check_multiples_closure(&even_holes(), 50).unwrap();
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.witness, Some(Witness::Multiple { k: 5, multiple: 10 }));
        let v = check_multiples_closure(&HoleClassSpec::odd_tail(5, []), 50).unwrap();
        assert_eq!(v.status, Status::Pass);
        assert_eq!(v.witness, Some(Witness::Threshold { m: 4, r: 0 }));
        assert_eq!(check_multiples_closure(&HoleClassSpec::finite([4, 7]), 50).unwrap().status, Status::Pass);
    }

    #[test]
    fn infinite_cycles_condition() {
        assert_eq!(check_infinite_cycles(&HoleClassSpec::cofinite([])).status, Status::Fail);
        assert_eq!(check_infinite_cycles(&primes()).status, Status::Pass);
        assert_eq!(check_infinite_cycles(&HoleClassSpec::finite([6])).status, Status::Pass);
    }

    #[test]
    fn coupling_condition() {
        let v = check_coupling_cofiniteness(&HoleClassSpec::odd_tail(5, []), 50).unwrap();
        assert_eq!(v.status, Status::Pass);
        assert_eq!(v.witness, Some(Witness::Threshold { m: 4, r: 2 }));
        let v = check_coupling_cofiniteness(&primes(), 50).unwrap();
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.witness, Some(Witness::CoprimeLengths { lengths: vec![4, 9], gcd: 1 }));
        let v = check_coupling_cofiniteness(&HoleClassSpec::cofinite([7]), 50).unwrap();
        assert_eq!(v.status, Status::NotApplicable);
    }

    #[test]
    fn named_classes() {
        let r = analyze(&primes(), 50).unwrap();
        assert_eq!(r.overall, Overall::NotExpressibleAcyclic);
        let r = analyze(&even_holes(), 50).unwrap();
        assert_eq!(r.overall, Overall::NotExpressibleAcyclic);
        assert_eq!(status(&r, Condition::Multiples), Status::Fail);
        let r = analyze(&HoleClassSpec::cofinite([]), 50).unwrap();
        assert_eq!(r.overall, Overall::NotExpressibleAny);
        assert_eq!(r.acyclic, VariantVerdict::Candidate);
        assert_eq!(status(&r, Condition::InfiniteCycles), Status::Fail);
        let r = analyze(&HoleClassSpec::odd_tail(7, [5]), 50).unwrap();
        assert_eq!(r.overall, Overall::NecessaryConditionsPass);
        let multiples_of_three = HoleClassSpec::custom(60, HoleTail::Other, |k| k % 3 == 0).unwrap();
        assert_eq!(analyze(&multiples_of_three, 50).unwrap().overall, Overall::NotExpressibleAcyclic);
    }

    #[test]
    fn consistency_of_overall() {
        let specs = [
            primes(),
            even_holes(),
            HoleClassSpec::cofinite([5, 9]),
            HoleClassSpec::finite([4, 5, 6]),
            HoleClassSpec::odd_tail(9, [4]),
        ];
        for spec in specs {
            let r = analyze(&spec, 50).unwrap();
            let any_fail = r.verdicts.iter().any(|v| v.status == Status::Fail);
            assert_eq!(r.overall != Overall::NecessaryConditionsPass, any_fail);
            for v in &r.verdicts {
                if v.status == Status::Fail {
                    assert!(v.witness.is_some());
                }
            }
        }
    }

    #[test]
    fn short_samples_do_not_fail_declared_tails() {
        let r = analyze(&HoleClassSpec::odd_tail(30, []), 50).unwrap();
        assert_eq!(status(&r, Condition::CouplingCofinite), Status::Unresolved);
        assert_eq!(r.overall, Overall::NecessaryConditionsPass);
        let r = analyze(&HoleClassSpec::odd_tail(30, []), 120).unwrap();
        assert_eq!(status(&r, Condition::CouplingCofinite), Status::Pass);
    }

    #[test]
    fn short_lengths_are_clamped() {
        let r = analyze(&HoleClassSpec::finite([3, 5]), 20).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!(r.cyc_sample.contains(&3));
    }

    #[test]
    fn spec_files() {
        let s = parse_hole_spec("variant=odd_tail M=5").unwrap();
        assert_eq!(s, HoleClassSpec::odd_tail(5, []));
        let s = parse_hole_spec("# primes\nvariant=custom tail=coinfinite rule=primes bound=60\n").unwrap();
        assert_eq!(s, primes());
        let s = parse_hole_spec("variant=custom tail=coinfinite members=5,7,11,...").unwrap();
        assert!(matches!(s, HoleClassSpec::Custom { bound: 50, .. }));
        assert!(matches!(
            parse_hole_spec("variant=custom members=5"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_hole_spec("variant=finite\nM=4"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
