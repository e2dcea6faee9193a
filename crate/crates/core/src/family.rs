//! Named graph families and their `kind:params` text form.
//!
//! | spec                      | graph                                              |
//! |---------------------------|----------------------------------------------------|
//! | `path:n`                  | `P_n`, vertices in path order                      |
//! | `cycle:n`                 | `C_n` (`n >= 3`), vertices in ring order           |
//! | `complete:n`              | `K_n`                                              |
//! | `star:r`                  | `K_{1,r}`, center 0, leaves `1..=r`                |
//! | `spider:r:mask`           | `K_{1,r}` with spoke `i` subdivided when bit `i` of `mask` is set |
//! | `hypercube:d`             | `Q_d`, `u ~ v` iff indices differ in one bit       |
//! | `random:n:p:seed`         | `G(n, p)` from the SplitMix64 stream (see below)   |
//!
//! Spider numbering: center 0, leaves `1..=r`, then one subdivision vertex
//! per subdivided spoke in increasing spoke order. A subdivided spoke `i`
//! becomes the path `0 - s_i - (i + 1)`.
//!
//! Random graphs: `p` is written as a decimal (`0.5`) or a fraction (`1/2`)
//! and reduced to lowest terms `num/den`. A SplitMix64 generator is seeded with `seed`;
//! pairs are visited in graph6 column order (`(0,1), (0,2), (1,2), (0,3), ...`)
//! and each draws one output `x`, adding the edge iff `x % den < num`.
//! SplitMix64 step: `state += 0x9E3779B97F4A7C15; z = state;
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
//! return z ^ (z >> 31)` (wrapping arithmetic).

use std::fmt;
use std::str::FromStr;

use crate::bitset::WORD_BITS;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Spider { legs: usize, subdivided: u64 },
    Hypercube(usize),
    Random { n: usize, num: u64, den: u64, seed: u64 },
}

/// The SplitMix64 sequence used for seeded random graphs.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

fn reduced(num: u64, den: u64) -> (u64, u64) {
    let (mut a, mut b) = (num, den);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    match (num.checked_div(a), den.checked_div(a)) {
        (Some(n), Some(d)) => (n, d),
        _ => (num, den),
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if n < 1 => Err(invalid("n must be >= 1")),
            FamilySpec::Cycle(n) if n < 3 => Err(invalid(format!("cycle needs n >= 3, got {n}"))),
            FamilySpec::Star(r) if r < 1 => Err(invalid("star needs r >= 1")),
            FamilySpec::Spider { legs, .. } if legs < 1 => Err(invalid("spider needs r >= 1")),
            FamilySpec::Spider { legs, subdivided } if legs < 64 && subdivided >> legs != 0 => {
                Err(invalid(format!("subdivision mask {subdivided} names spokes beyond {legs}")))
            }
            FamilySpec::Hypercube(d) if d < 1 => Err(invalid("hypercube needs d >= 1")),
            FamilySpec::Hypercube(d) if d > WORD_BITS.trailing_zeros() as usize => {
                Err(Error::Capacity { n: usize::MAX, capacity: WORD_BITS })
            }
            FamilySpec::Random { n, .. } if n < 1 => Err(invalid("n must be >= 1")),
            FamilySpec::Random { num, den, .. } if den == 0 || num > den => {
                Err(invalid(format!("edge probability {num}/{den} not in [0, 1]")))
            }
            _ => Ok(()),
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Random { n, .. } => n,
            FamilySpec::Star(r) => r + 1,
            FamilySpec::Spider { legs, subdivided } => legs + 1 + subdivided.count_ones() as usize,
            FamilySpec::Hypercube(d) => 1 << d,
        }
    }

    /// Short name such as `P4`, `K1,3` or `Q3`.
    pub fn name(&self) -> String {
        match *self {
            FamilySpec::Path(n) => format!("P{n}"),
            FamilySpec::Cycle(n) => format!("C{n}"),
            FamilySpec::Complete(n) => format!("K{n}"),
            FamilySpec::Star(r) => format!("K1,{r}"),
            FamilySpec::Spider { legs, subdivided } => format!("spider({legs},{subdivided})"),
            FamilySpec::Hypercube(d) => format!("Q{d}"),
            FamilySpec::Random { n, num, den, seed } => {
                let (num, den) = reduced(num, den);
                format!("G({n},{num}/{den},{seed})")
            }
        }
    }
}

pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let mut g = Graph::empty(n)?;
    match *spec {
        FamilySpec::Path(n) => {
            for i in 1..n {
                g.add_edge(i - 1, i);
            }
        }
        FamilySpec::Cycle(n) => {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        FamilySpec::Complete(n) => {
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
        }
        FamilySpec::Star(r) => {
            for leaf in 1..=r {
                g.add_edge(0, leaf);
            }
        }
        FamilySpec::Spider { legs, subdivided } => {
            let mut next = legs + 1;
            for spoke in 0..legs {
                let leaf = spoke + 1;
                if spoke < 64 && subdivided >> spoke & 1 == 1 {
                    g.add_edge(0, next);
                    g.add_edge(next, leaf);
                    next += 1;
                } else {
                    g.add_edge(0, leaf);
                }
            }
        }
        FamilySpec::Hypercube(d) => {
            for u in 0..n {
                for b in 0..d {
                    let v = u ^ (1 << b);
                    if u < v {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        FamilySpec::Random { n, num, den, seed } => {
            let (num, den) = reduced(num, den);
            let mut rng = SplitMix64::new(seed);
            for j in 1..n {
                for i in 0..j {
                    if rng.next_u64() % den < num {
                        g.add_edge(i, j);
                    }
                }
            }
        }
    }
    Ok(g.with_label(spec.name()))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(r) => write!(f, "star:{r}"),
            FamilySpec::Spider { legs, subdivided } => write!(f, "spider:{legs}:{subdivided}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::Random { n, num, den, seed } => write!(f, "random:{n}:{num}/{den}:{seed}"),
        }
    }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse().map_err(|_| invalid(format!("'{s}' is not a non-negative integer")))
}

fn parse_u64(s: &str) -> Result<u64> {
    s.parse().map_err(|_| invalid(format!("'{s}' is not a non-negative integer")))
}

/// Parses `1/2`, `0.5`, `1` or `0` into a `num/den` pair in lowest terms.
fn parse_probability(s: &str) -> Result<(u64, u64)> {
    if let Some((a, b)) = s.split_once('/') {
        return Ok(reduced(parse_u64(a)?, parse_u64(b)?));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(invalid(format!("bad probability '{s}'")));
    }
    let den = 10u64.pow(frac.len() as u32);
    let int = if int.is_empty() { 0 } else { parse_u64(int)? };
    let frac_val = if frac.is_empty() { 0 } else { parse_u64(frac)? };
    let num = int
        .checked_mul(den)
        .and_then(|x| x.checked_add(frac_val))
        .ok_or_else(|| invalid(format!("bad probability '{s}'")))?;
    Ok(reduced(num, den))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k + 1 {
                Ok(())
            } else {
                Err(invalid(format!("'{s}': expected {k} parameter(s)")))
            }
        };
        let spec = match parts[0] {
            "path" => {
                arity(1)?;
                FamilySpec::Path(parse_usize(parts[1])?)
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(parse_usize(parts[1])?)
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(parse_usize(parts[1])?)
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star(parse_usize(parts[1])?)
            }
            "spider" => {
                arity(2)?;
                FamilySpec::Spider {
                    legs: parse_usize(parts[1])?,
                    subdivided: parse_u64(parts[2])?,
                }
            }
            "hypercube" => {
                arity(1)?;
                FamilySpec::Hypercube(parse_usize(parts[1])?)
            }
            "random" => {
                arity(3)?;
                let (num, den) = parse_probability(parts[2])?;
                FamilySpec::Random {
                    n: parse_usize(parts[1])?,
                    num,
                    den,
                    seed: parse_u64(parts[3])?,
                }
            }
            other => return Err(invalid(format!("unknown family '{other}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
