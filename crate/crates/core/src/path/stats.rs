use serde::Serialize;

use super::{Path, Step};

/// Heights, valleys and peaks of a path.
///
/// Points are indexed by the number of steps taken to reach them, so the
/// final point of a path of length `n` has index `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathStats {
    pub heights: Vec<i32>,
    pub valleys: Vec<(usize, i32)>,
    pub peaks: Vec<(usize, i32)>,
    /// Height of the lowest valley.
    pub lv: Option<i32>,
    /// Height of the highest valley.
    pub hv: Option<i32>,
}

pub fn path_stats(path: &Path) -> PathStats {
    let valleys = path.valleys();
    PathStats {
        heights: path.heights(),
        lv: valleys.iter().map(|v| v.1).min(),
        hv: valleys.iter().map(|v| v.1).max(),
        peaks: path.peaks(),
        valleys,
    }
}

impl Path {
    fn turning_points(&self, step: Step) -> Vec<(usize, i32)> {
        let n = self.len();
        (1..=n)
            .filter(|&i| self.step(i - 1) == step && (i == n || self.step(i) != step))
            .map(|i| (i, self.height_at(i)))
            .collect()
    }

    /// Last points of maximal descents, including the endpoint when the
    /// path ends with a downstep.
    pub fn valleys(&self) -> Vec<(usize, i32)> {
        self.turning_points(Step::Down)
    }

    /// Last points of maximal ascents, including the endpoint when the path
    /// ends with an upstep.
    pub fn peaks(&self) -> Vec<(usize, i32)> {
        self.turning_points(Step::Up)
    }

    pub fn lv(&self) -> Option<i32> {
        self.valleys().into_iter().map(|v| v.1).min()
    }

    pub fn hv(&self) -> Option<i32> {
        self.valleys().into_iter().map(|v| v.1).max()
    }

    /// Minimum height over all points, including the origin.
    pub fn min_height(&self) -> i32 {
        (0..=self.len()).map(|i| self.height_at(i)).min().unwrap_or(0)
    }
}
