use std::collections::BTreeSet;

use super::{KernelOutcome, LosslessKernelResult};
use crate::instances::{PointSet, ProblemInstance};
use crate::{Error, Result};

/// Lines through more than the remaining budget of points are forced and
/// their points removed; lines through no remaining point are allowed.
pub fn plc_lossless_kernel(instance: &ProblemInstance, k: usize) -> Result<KernelOutcome> {
    let ProblemInstance::PointLineCover { points, lines, line_ids } = instance else {
        return Err(Error::InvalidArgument("expected a point line cover instance".into()));
    };
    let pts = points.points();
    let mut remaining = vec![true; pts.len()];
    let mut taken = vec![false; lines.len()];
    let mut budget = k as i64;
    let mut forced = BTreeSet::new();
    let on_line = |i: usize, remaining: &[bool]| (0..pts.len()).filter(|&p| remaining[p] && lines[i].contains(pts[p])).count();
    while let Some(i) = (0..lines.len()).find(|&i| !taken[i] && on_line(i, &remaining) as i64 > budget) {
        taken[i] = true;
        forced.insert(line_ids[i]);
        for p in 0..pts.len() {
            if lines[i].contains(pts[p]) {
                remaining[p] = false;
            }
        }
        budget -= 1;
        if budget < 0 {
            return Ok(KernelOutcome::No(format!("more than {k} lines are forced")));
        }
    }
    let budget = budget as usize;
    let left: Vec<_> = (0..pts.len()).filter(|&p| remaining[p]).map(|p| pts[p]).collect();
    if left.len() > budget * budget {
        return Ok(KernelOutcome::No(format!("{} points remain, more than {budget}²", left.len())));
    }
    let mut allowed = BTreeSet::new();
    let mut kept_lines = Vec::new();
    let mut kept_ids = Vec::new();
    for i in (0..lines.len()).filter(|&i| !taken[i]) {
        if on_line(i, &remaining) == 0 {
            allowed.insert(line_ids[i]);
        } else {
            kept_lines.push(lines[i]);
            kept_ids.push(line_ids[i]);
        }
    }
    let reduced = ProblemInstance::labeled_point_line_cover(PointSet::new(left)?, kept_lines, kept_ids)?;
    Ok(KernelOutcome::Reduced(LosslessKernelResult { reduced, forced, allowed, k, k_reduced: budget }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Point;

    fn plc(coords: &[(i64, i64)]) -> ProblemInstance {
        ProblemInstance::point_line_cover(PointSet::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap())
            .unwrap()
    }

    #[test]
    fn collinear_points_force_their_line() {
        let KernelOutcome::Reduced(kernel) = plc_lossless_kernel(&plc(&[(0, 0), (1, 1), (2, 2)]), 1).unwrap() else {
            panic!()
        };
        assert_eq!(kernel.forced, BTreeSet::from([0]));
        assert_eq!(kernel.reduced.size().primary, 0);
        assert_eq!(kernel.k_reduced, 0);
    }

    #[test]
    fn two_points_force_their_line() {
        let KernelOutcome::Reduced(kernel) = plc_lossless_kernel(&plc(&[(0, 0), (3, 1)]), 1).unwrap() else {
            panic!()
        };
        assert_eq!(kernel.forced.len(), 1);
        assert!(kernel.allowed.is_empty());
        assert_eq!(kernel.reduced.size().primary, 0);
    }

    #[test]
    fn too_many_points_is_no() {
        let square = plc(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert!(matches!(plc_lossless_kernel(&square, 1).unwrap(), KernelOutcome::No(_)));
    }

    #[test]
    fn lines_through_a_lone_point_stay() {
        // three points on the x-axis plus one above: the axis is forced
        let inst = plc(&[(0, 0), (1, 0), (2, 0), (5, 7)]);
        let KernelOutcome::Reduced(kernel) = plc_lossless_kernel(&inst, 2).unwrap() else { panic!() };
        assert_eq!(kernel.forced.len(), 1);
        assert_eq!(kernel.k_reduced, 1);
        assert_eq!(kernel.reduced.size().primary, 1);
        assert_eq!(kernel.reduced.domain_len(), 3);
        assert!(kernel.allowed.is_empty());
    }
}
