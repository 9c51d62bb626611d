use normcol::graph::{dedup_isomorphic, enumerate_cubic};
use std::time::Instant;

fn main() {
    for n in [4usize, 6, 8, 10, 12] {
        let t = Instant::now();
        let all: Vec<_> = enumerate_cubic(n).collect();
        let labelled = all.len();
        let classes = dedup_isomorphic(all).len();
        println!("n={n} labelled={labelled} classes={classes} {:?}", t.elapsed());
    }
}
