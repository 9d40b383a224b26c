//! Dispatch from a pattern to one of the four edge-removal constructions.
//!
//! Patterns starting with 2 are handled through the complement pattern on the
//! supplement graph. Among patterns starting with 1:
//!
//! | shape                    | core          |
//! |--------------------------|---------------|
//! | `1^k`                    | `OneK`        |
//! | `1^a 2^b 1 ...`          | `BlockReturn` |
//! | `1^(k-1) 2`              | `OnesTwo`     |
//! | `1^a 2^b`, `a, b >= 2`   | `OnesTwos`    |
//! | `1 2^(k-1)`              | `OnesTwo` on the reverse complement |

use std::fmt;

use crate::error::{Error, Result};
use crate::words::Pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphTransform {
    SupplementGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordTransform {
    ComplementWord,
    ReverseWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Core {
    /// `1^k`, `k >= 3`.
    OneK { k: usize },
    /// `1^a 2^b 1 tail`, `a, b >= 1`.
    BlockReturn { a: usize, b: usize, tail: Vec<u32> },
    /// `1^(k-1) 2`, `k >= 3`.
    OnesTwo { k: usize },
    /// `1^a 2^b`, `a, b >= 2`.
    OnesTwos { a: usize, b: usize },
}

impl Core {
    pub fn name(&self) -> &'static str {
        match self {
            Core::OneK { .. } => "one-k",
            Core::BlockReturn { .. } => "block-return",
            Core::OnesTwo { .. } => "ones-two",
            Core::OnesTwos { .. } => "ones-twos",
        }
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Core::OneK { k } | Core::OnesTwo { k } => write!(f, "{}(k={k})", self.name()),
            Core::BlockReturn { a, b, tail } => {
                let tail: String = tail.iter().map(|l| l.to_string()).collect();
                write!(f, "{}(a={a},b={b},tail={tail:?})", self.name())
            }
            Core::OnesTwos { a, b } => write!(f, "{}(a={a},b={b})", self.name()),
        }
    }
}

impl fmt::Display for GraphTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("supplement-graph")
    }
}

impl fmt::Display for WordTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordTransform::ComplementWord => "complement-word",
            WordTransform::ReverseWord => "reverse-word",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPlan {
    /// The pattern the caller asked for.
    pub pattern: Pattern,
    /// Applied to the input graph, in order.
    pub pre_transforms: Vec<GraphTransform>,
    pub core: Core,
    /// Applied to the core's word, in order.
    pub post_transforms: Vec<WordTransform>,
    /// The pattern the core construction runs with.
    pub effective_pattern: Pattern,
}

impl fmt::Display for ConstructionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre: Vec<String> = self.pre_transforms.iter().map(|t| t.to_string()).collect();
        let post: Vec<String> = self.post_transforms.iter().map(|t| t.to_string()).collect();
        write!(
            f,
            "plan: pattern={} pre=[{}] core={} post=[{}] effective={}",
            self.pattern,
            pre.join(", "),
            self.core,
            post.join(", "),
            self.effective_pattern
        )
    }
}

pub fn plan(u: &Pattern) -> Result<ConstructionPlan> {
    if u.len() < 3 {
        return Err(Error::UnsupportedPattern(u.to_string()));
    }
    let mut out = plan_inner(u);
    out.pattern = u.clone();
    Ok(out)
}

fn plan_inner(u: &Pattern) -> ConstructionPlan {
    let letters = u.letters();
    let k = letters.len();

    if letters[0] == 2 {
        let mut inner = plan_inner(&u.complement());
        inner
            .pre_transforms
            .insert(0, GraphTransform::SupplementGraph);
        inner.post_transforms.push(WordTransform::ComplementWord);
        inner.pattern = u.clone();
        return inner;
    }

    let a = letters.iter().take_while(|&&l| l == 1).count();
    let b = letters[a..].iter().take_while(|&&l| l == 2).count();
    let direct = |core: Core| ConstructionPlan {
        pattern: u.clone(),
        pre_transforms: vec![],
        core,
        post_transforms: vec![],
        effective_pattern: u.clone(),
    };

    if a == k {
        direct(Core::OneK { k })
    } else if a + b < k {
        direct(Core::BlockReturn {
            a,
            b,
            tail: letters[a + b + 1..].to_vec(),
        })
    } else if b == 1 {
        direct(Core::OnesTwo { k })
    } else if a == 1 {
        // 1 2^(k-1): reverse complement is 1^(k-1) 2
        ConstructionPlan {
            pattern: u.clone(),
            pre_transforms: vec![GraphTransform::SupplementGraph],
            core: Core::OnesTwo { k },
            post_transforms: vec![WordTransform::ComplementWord, WordTransform::ReverseWord],
            effective_pattern: u.complement().reverse(),
        }
    } else {
        direct(Core::OnesTwos { a, b })
    }
}
