//! Versioned JSON output.

use serde::Serialize;

use permprod_core::chain::SplitTree;
use permprod_core::Permutation;

use crate::check::Check;

pub const SCHEMA: &str = "permprod/1";

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: &'static str,
    pub command: CommandEcho,
    pub seed: u64,
    pub result: T,
    pub verification: Verification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        Verification {
            passed: checks.iter().all(|c| c.ok),
            checks,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_solve_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermJson {
    pub cycles: String,
    pub images: Vec<usize>,
}

impl From<&Permutation> for PermJson {
    fn from(p: &Permutation) -> Self {
        PermJson {
            cycles: p.to_string(),
            images: p.images(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TreeJson {
    Solver { orders: [usize; 3] },
    Table { orders: [usize; 3] },
    Involutions { len: usize },
    Split {
        prime: usize,
        mid: usize,
        left: Box<TreeJson>,
        right: Box<TreeJson>,
    },
}

impl From<&SplitTree> for TreeJson {
    fn from(t: &SplitTree) -> Self {
        match t {
            SplitTree::Solver { orders } => TreeJson::Solver { orders: *orders },
            SplitTree::Table { orders } => TreeJson::Table { orders: *orders },
            SplitTree::Involutions { len } => TreeJson::Involutions { len: *len },
            SplitTree::Split { prime, mid, left, right } => TreeJson::Split {
                prime: *prime,
                mid: *mid,
                left: Box::new(left.as_ref().into()),
                right: Box::new(right.as_ref().into()),
            },
        }
    }
}
