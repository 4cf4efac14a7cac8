//! Diverse vertex covers with both tree-decomposition solvers and the oracle.

use diversekit::cores::{solve_diverse_vc, solve_diverse_vc_direct};
use diversekit::decomposition::{minimum_vertex_cover, normalize, pd_from_vertex_cover};
use diversekit::diversity::diversity;
use diversekit::instances::{Graph, ProblemInstance};
use diversekit::oracle;

fn main() -> diversekit::Result<()> {
    let c6 = Graph::new(6, (0..6).map(|v| (v, (v + 1) % 6)))?;
    let td = normalize(&pd_from_vertex_cover(&c6, &minimum_vertex_cover(&c6))?)?;
    let (k, r) = (4, 3);

    let space = oracle::enumerate_solutions(&ProblemInstance::vertex_cover(c6.clone()), k)?;
    let best = oracle::max_diversity(&space, r)?.map(|(value, _)| value).unwrap_or(0);
    println!("C6 has {} covers of size at most {k}; best diversity for r = {r} is {best}", space.len());

    for d in [best - 2, best, best + 1] {
        let framework = solve_diverse_vc(&c6, &td, k, r, d, 1)?;
        let direct = solve_diverse_vc_direct(&c6, &td, k, r, d)?;
        println!("d = {d}: framework {} direct {}", framework.decision, direct.decision);
        if let Some(sets) = framework.solutions {
            println!("  {sets:?} with diversity {}", diversity(&sets));
        }
        let peak = framework.stats.iter().map(|s| s.states).max().unwrap_or(0);
        println!("  largest table: framework {peak}, direct {}", direct.max_tuples());
    }
    Ok(())
}
