use super::defect::{morse_defect, DefectError};
use crate::metric::{DiscretePath, MetricGraph, QgParams};

/// A finite grid of quasi-geodesic parameters.
#[derive(Debug, Clone)]
pub struct QGrid {
    pub cells: Vec<QgParams>,
}

impl QGrid {
    /// The default desk-scale grid `{1,2,3,5} × {0,1,2,4}`, λ-major.
    pub fn default_grid() -> QGrid {
        let mut cells = Vec::new();
        for l in [1, 2, 3, 5] {
            for e in [0, 1, 2, 4] {
                cells.push(QgParams::ints(l, e));
            }
        }
        QGrid { cells }
    }

    /// Just the stall-free column `{1,2,3,5} × {0}`.
    pub fn epsilon_zero_column() -> QGrid {
        QGrid {
            cells: [1, 2, 3, 5].map(|l| QgParams::ints(l, 0)).to_vec(),
        }
    }

    pub fn of(cells: Vec<QgParams>) -> QGrid {
        QGrid { cells }
    }
}

/// One grid cell of an empirical gauge table.
#[derive(Debug, Clone)]
pub struct GaugeEntry {
    pub params: QgParams,
    pub defect: u32,
    pub witness: DiscretePath,
    pub nodes: u64,
    pub exhaustive: bool,
}

/// Empirical lower-bound table `N̂(λ,ε)` for one path.
#[derive(Debug, Clone)]
pub struct MorseGaugeTable {
    pub entries: Vec<GaugeEntry>,
}

impl MorseGaugeTable {
    pub fn max_defect(&self) -> u32 {
        self.entries.iter().map(|e| e.defect).max().unwrap_or(0)
    }

    /// Largest defect among `ε = 0` cells.
    pub fn epsilon_zero_max(&self) -> u32 {
        self.entries
            .iter()
            .filter(|e| e.params.epsilon() == num_rational::Ratio::from_integer(0))
            .map(|e| e.defect)
            .max()
            .unwrap_or(0)
    }

    pub fn exhaustive(&self) -> bool {
        self.entries.iter().all(|e| e.exhaustive)
    }

    pub fn entry(&self, q: QgParams) -> Option<&GaugeEntry> {
        self.entries.iter().find(|e| e.params == q)
    }
}

/// Evaluates [`morse_defect`] over a parameter grid.
///
/// The defect is monotone in `(λ, ε)` because the quasi-geodesic family only
/// grows; a budget-starved cell could break that, so monotonicity is enforced
/// by carrying the running maximum (together with its witness, which remains
/// a valid quasi-geodesic at any larger parameters).
pub fn morse_gauge_estimate(
    g: &MetricGraph,
    path: &DiscretePath,
    grid: &QGrid,
    maxlen: u32,
    budget_per_cell: u64,
) -> Result<MorseGaugeTable, DefectError> {
    let mut entries: Vec<GaugeEntry> = Vec::with_capacity(grid.cells.len());
    for &q in &grid.cells {
        let r = morse_defect(g, path, q, maxlen, budget_per_cell)?;
        let mut entry = GaugeEntry {
            params: q,
            defect: r.defect,
            witness: r.witness,
            nodes: r.nodes,
            exhaustive: r.exhaustive,
        };
        for prev in &entries {
            let dominated = prev.params.lambda() <= q.lambda()
                && prev.params.epsilon() <= q.epsilon();
            if dominated && prev.defect > entry.defect {
                entry.defect = prev.defect;
                entry.witness = prev.witness.clone();
            }
        }
        entries.push(entry);
    }
    Ok(MorseGaugeTable { entries })
}
