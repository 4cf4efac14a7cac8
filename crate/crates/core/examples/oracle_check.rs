//! Brute-force reference: enumerate every small solution and find the most
//! diverse tuple, for each problem read from its text format.

use diversekit::instances::{parse_instance, write_instance, ProblemKind};
use diversekit::oracle;

fn main() -> diversekit::Result<()> {
    let inputs = [
        (ProblemKind::Vc, "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n", 2),
        (ProblemKind::Hs, "p hs 4 2 3\nh 1 2 3\nh 3 4\n", 2),
        (ProblemKind::Plc, "0 0\n1 1\n2 2\n0 1\n", 2),
        (ProblemKind::Fast, "p tour 3\na 1 2\na 2 3\na 3 1\n", 1),
    ];
    for (kind, text, k) in inputs {
        let instance = parse_instance(kind, text)?;
        let space = oracle::enumerate_solutions(&instance, k)?;
        println!("{kind}: domain {:?}, {} solutions of size at most {k}", space.domain(), space.len());
        for r in 1..=3 {
            if let Some((value, tuple)) = oracle::max_diversity(&space, r)? {
                println!("  r = {r}: max diversity {value} via {tuple:?}");
            }
        }
        print!("{}", write_instance(&instance));
    }
    Ok(())
}
