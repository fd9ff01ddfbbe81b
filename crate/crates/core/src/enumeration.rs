//! Exhaustive distribution tables and the closed-form counts they confirm.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{GroupBackend, GroupKind, MAX_A};
use crate::oracle;
use crate::patterns;
use crate::perm::Permutation;
use crate::poly::BiPoly;
use crate::stats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stat {
    Depth,
    Drop,
    Length,
    ReflectionLength,
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stat::Depth => "depth",
            Stat::Drop => "drop",
            Stat::Length => "length",
            Stat::ReflectionLength => "reflection_length",
        })
    }
}

/// `counts[k] = |{w : stat(w) = k}|` over a whole group. For `I2` groups `n`
/// holds `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthTable {
    pub kind: String,
    pub stat: Stat,
    pub n: usize,
    pub counts: Vec<u64>,
}

impl DepthTable {
    fn from_values(group: GroupKind, stat: Stat, values: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = Vec::new();
        for v in values {
            if v >= counts.len() {
                counts.resize(v + 1, 0);
            }
            counts[v] += 1;
        }
        Self {
            kind: group.family().to_string(),
            stat,
            n: group.parameter(),
            counts,
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Largest `k` with a nonzero count.
    pub fn max_value(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }
}

/// Exact distribution of `stat` over the group `kind`. Type A uses the
/// closed-form statistics; types B and I₂ use the backend's Coxeter lengths
/// and the Cayley-graph oracles.
pub fn distribution(kind: GroupKind, stat: Stat) -> Result<DepthTable> {
    kind.validate()?;
    match kind {
        GroupKind::A(n) => {
            let f: fn(&Permutation) -> usize = match stat {
                Stat::Depth => stats::depth,
                Stat::Drop => stats::descent_drop,
                Stat::Length => stats::length,
                Stat::ReflectionLength => stats::reflection_length,
            };
            Ok(DepthTable::from_values(
                kind,
                stat,
                Permutation::all(n).map(|w| f(&w)),
            ))
        }
        GroupKind::B(_) | GroupKind::I2(_) => {
            let backend = GroupBackend::build(kind)?;
            let values = match stat {
                Stat::Depth => oracle::depth_oracle(&backend),
                Stat::Length => backend.lengths().to_vec(),
                Stat::ReflectionLength => oracle::reflection_length_oracle(&backend),
                Stat::Drop => {
                    return Err(Error::Unsupported(format!(
                        "descent drop is only defined for type A, not {kind}"
                    )))
                }
            };
            Ok(DepthTable::from_values(kind, stat, values))
        }
    }
}

pub fn depth_distribution(kind: GroupKind) -> Result<DepthTable> {
    distribution(kind, Stat::Depth)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JointPair {
    /// `q^drop t^des`
    DropDes,
    /// `q^dep t^exc`
    DepExc,
}

/// `Σ_{w ∈ S_n} q^{weight(w)} t^{count(w)}` for one of the two pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointTable {
    pub n: usize,
    pub pair: JointPair,
    pub poly: BiPoly,
}

pub fn joint_distribution(n: usize, pair: JointPair) -> Result<JointTable> {
    GroupKind::A(n).validate()?;
    let poly = Permutation::all(n)
        .map(|w| match pair {
            JointPair::DropDes => (stats::descent_drop(&w), stats::descents(&w)),
            JointPair::DepExc => (stats::depth(&w), stats::excedances(&w)),
        })
        .collect();
    Ok(JointTable { n, pair, poly })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    /// 321-avoiding.
    Fc,
    /// 321- and 3412-avoiding.
    Boolean,
    /// 231-, 312- and 321-avoiding.
    Free,
    DepthEq(usize),
    /// Boolean permutations of length `k`.
    BooleanByLength(usize),
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::Fc => f.write_str("fc"),
            Class::Boolean => f.write_str("boolean"),
            Class::Free => f.write_str("free"),
            Class::DepthEq(k) => write!(f, "depth_eq({k})"),
            Class::BooleanByLength(k) => write!(f, "boolean_by_length({k})"),
        }
    }
}

/// Exhaustive count next to the closed form, when one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub n: usize,
    pub class: Class,
    pub exhaustive: u64,
    pub closed_form: Option<u64>,
}

impl ClassCount {
    /// False only when a closed form exists and disagrees.
    pub fn agrees(&self) -> bool {
        self.closed_form.is_none_or(|c| c == self.exhaustive)
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

pub fn catalan(n: usize) -> u64 {
    binomial(2 * n, n) / (n as u64 + 1)
}

/// Fibonacci numbers with `F_1 = F_2 = 1`.
pub fn fibonacci(k: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// Number of boolean permutations in `S_n` of length `k`:
/// `Σ_{i=1}^{k} C(n-i, k+1-i) C(k-1, i-1)`, and 1 for `k = 0`.
pub fn boolean_by_length_formula(n: usize, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    (1..=k.min(n))
        .map(|i| binomial(n - i, k + 1 - i) * binomial(k - 1, i - 1))
        .sum()
}

fn closed_form(n: usize, class: Class) -> Option<u64> {
    match class {
        Class::Fc => Some(catalan(n)),
        Class::Boolean => Some(fibonacci(2 * n - 1)),
        Class::Free => Some(fibonacci(n + 1)),
        Class::BooleanByLength(k) => Some(boolean_by_length_formula(n, k)),
        Class::DepthEq(k) => {
            if k == stats::max_depth_bound(n) {
                stats::max_depth_count(n).ok()
            } else {
                match k {
                    0 => Some(1),
                    1 => Some(n as u64 - 1),
                    2 if n >= 3 => Some(((n + 3) * (n - 2) / 2) as u64),
                    _ if k > stats::max_depth_bound(n) => Some(0),
                    _ => None,
                }
            }
        }
    }
}

pub fn count_class(n: usize, class: Class) -> Result<ClassCount> {
    GroupKind::A(n).validate()?;
    let member: Box<dyn Fn(&Permutation) -> bool> = match class {
        Class::Fc => Box::new(patterns::is_fc),
        Class::Boolean => Box::new(patterns::is_boolean),
        Class::Free => Box::new(patterns::is_free),
        Class::DepthEq(k) => Box::new(move |w| stats::depth(w) == k),
        Class::BooleanByLength(k) => {
            Box::new(move |w| patterns::is_boolean(w) && stats::length(w) == k)
        }
    };
    let exhaustive = Permutation::all(n).filter(|w| member(w)).count() as u64;
    Ok(ClassCount {
        n,
        class,
        exhaustive,
        closed_form: closed_form(n, class),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Plain,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::MalformedToken(other.to_string())),
        }
    }
}

/// Plain: the counts on one line. CSV: `n,k,count` rows under a header.
/// JSON: `{kind, stat, n, counts}`.
pub fn export_table(table: &DepthTable, format: Format) -> String {
    match format {
        Format::Plain => {
            let parts: Vec<String> = table.counts.iter().map(|c| c.to_string()).collect();
            parts.join(" ") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("n,k,count\n");
            for (k, c) in table.counts.iter().enumerate() {
                writeln!(out, "{},{},{}", table.n, k, c).expect("write to String");
            }
            out
        }
        Format::Json => serde_json::to_string(table).expect("serializable") + "\n",
    }
}

pub fn export_joint(table: &JointTable, format: Format) -> String {
    match format {
        Format::Plain => format!("{}\n", table.poly),
        Format::Csv => {
            let mut out = String::from("n,q,t,count\n");
            for (q, t, c) in table.poly.terms() {
                writeln!(out, "{},{},{},{}", table.n, q, t, c).expect("write to String");
            }
            out
        }
        Format::Json => serde_json::to_string(table).expect("serializable") + "\n",
    }
}

/// Largest `n` for the type-A tables.
pub const MAX_TABLE_N: usize = MAX_A;
