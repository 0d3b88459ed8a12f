//! Exact WZ grids, one task per row so rows run in parallel.

use rayon::prelude::*;
use supercong_core::registry::evaluate_identity_sides;
use supercong_core::CheckId;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WzFamily {
    pub id: CheckId,
    /// Human-readable range that was covered.
    pub range: String,
    pub points: usize,
    /// Parameters (with index detail) that failed.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WzSummary {
    pub families: Vec<WzFamily>,
}

impl WzSummary {
    pub fn failures(&self) -> usize {
        self.families.iter().map(|f| f.failures.len()).sum()
    }
}

fn family(id: CheckId, range: String, params: Vec<u64>, points: usize) -> Result<WzFamily, CliError> {
    let results: Vec<Result<Option<String>, CliError>> = params
        .par_iter()
        .map(|&n| {
            let ev = evaluate_identity_sides(id, n)?;
            Ok((!ev.holds()).then(|| match ev.detail {
                Some(d) => format!("{n} ({d})"),
                None => n.to_string(),
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok(WzFamily { id, range, points, failures })
}

/// Runs the pair relation on `1 <= k <= n+1 <= grid_n`, the summand and
/// Pochhammer forms for `n <= grid_n`, and both telescopes up to
/// `telescope_max`.
pub fn run_wz(grid_n: u64, telescope_max: u64) -> Result<WzSummary, CliError> {
    if grid_n == 0 {
        return Err(CliError::InvalidArgument("--grid must be at least 1".into()));
    }
    if telescope_max == 0 {
        return Err(CliError::InvalidArgument("--telescope must be at least 1".into()));
    }
    let g = grid_n;
    let t = telescope_max;
    let odd: Vec<u64> = (1..=t).step_by(2).collect();
    let families = vec![
        family(CheckId::WZ_RELATION, format!("1 <= k <= n+1 <= {g}"), (0..g).collect(), (g * (g + 1) / 2) as usize)?,
        family(CheckId::F_SUMMAND, format!("0 <= n <= {g}"), (0..=g).collect(), g as usize + 1)?,
        family(CheckId::G_REFORM, format!("1 <= k <= n <= {g}"), (1..=g).collect(), (g * (g + 1) / 2) as usize)?,
        family(CheckId::WZ_TELESCOPE_HALF, format!("odd m <= {t}"), odd.clone(), odd.len())?,
        family(CheckId::WZ_TELESCOPE_FULL, format!("1 <= m <= {t}"), (1..=t).collect(), t as usize)?,
    ];
    Ok(WzSummary { families })
}
