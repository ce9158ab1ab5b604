use std::fs;
use std::path::PathBuf;

use clap::Args;
use trace_ch::sample::{random_matrix, seeded_rng};
use trace_ch::{generic_matrix, Matrix, MatrixFile, Naming, RingElement};

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Fully symbolic matrix of this order (entries a_i_j).
    #[arg(long, value_name = "N", conflicts_with_all = ["matrix", "random"])]
    pub generic: Option<usize>,

    /// Matrix JSON file: {"n": N, "entries": [["expr", ...], ...]}.
    #[arg(long, value_name = "FILE", conflicts_with = "random")]
    pub matrix: Option<PathBuf>,

    /// Seeded random integer matrices.
    #[arg(long, requires = "n")]
    pub random: bool,

    /// Order of the random matrices.
    #[arg(long)]
    pub n: Option<usize>,

    /// How many random matrices.
    #[arg(long, default_value_t = 1)]
    pub count: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Smallest random entry.
    #[arg(long, default_value_t = -9, allow_hyphen_values = true)]
    pub lo: i64,

    /// Largest random entry.
    #[arg(long, default_value_t = 9, allow_hyphen_values = true)]
    pub hi: i64,
}

pub struct Input {
    pub label: String,
    pub matrix: Matrix<RingElement>,
}

impl Input {
    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn naming(&self) -> Naming {
        Naming::for_order(self.n())
    }

    pub fn fmt(&self, v: &RingElement) -> String {
        v.display(self.naming()).to_string()
    }
}

impl InputArgs {
    pub fn load(&self) -> Result<Vec<Input>, String> {
        if let Some(n) = self.generic {
            if n == 0 {
                return Err("--generic needs an order of at least 1".into());
            }
            return Ok(vec![Input {
                label: format!("generic n={n}"),
                matrix: generic_matrix(n),
            }]);
        }
        if let Some(path) = &self.matrix {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let file = MatrixFile::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            let matrix = file.to_matrix().map_err(|e| format!("{}: {e}", path.display()))?;
            return Ok(vec![Input {
                label: path.display().to_string(),
                matrix,
            }]);
        }
        if self.random {
            let n = self.n.expect("clap enforces --n");
            if n == 0 {
                return Err("--n must be at least 1".into());
            }
            if self.lo > self.hi {
                return Err(format!("--lo {} exceeds --hi {}", self.lo, self.hi));
            }
            let mut rng = seeded_rng(self.seed);
            return Ok((0..self.count)
                .map(|i| Input {
                    label: format!("random #{} (n={n}, seed={})", i + 1, self.seed),
                    matrix: random_matrix(&mut rng, n, self.lo, self.hi),
                })
                .collect());
        }
        Err("one of --generic, --matrix, or --random is required".into())
    }
}
