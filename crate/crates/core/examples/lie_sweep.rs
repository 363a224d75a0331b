use strtopo::frobenius::{builtin, kunneth};
use strtopo::lie::{check_lie_bialgebra, LieSweep};

fn main() {
    let len: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().unwrap())
        .unwrap_or(3);
    let mut algs: Vec<_> = ["S2xS2", "S3", "CP2", "S2", "S4", "S7ext"]
        .iter()
        .map(|n| builtin(n).unwrap())
        .collect();
    algs.push(kunneth(&builtin("S2").unwrap(), &builtin("S3").unwrap(), "S2xS3").unwrap());
    algs.push(kunneth(&builtin("S3").unwrap(), &builtin("S3").unwrap(), "S3xS3").unwrap());
    for a in algs {
        let r = check_lie_bialgebra(&a, LieSweep::new(len));
        let bad: Vec<_> = r
            .results
            .iter()
            .filter(|x| !x.passed)
            .map(|x| x.identity.clone())
            .collect();
        println!("{} {:?}", a.name(), bad);
    }
}
