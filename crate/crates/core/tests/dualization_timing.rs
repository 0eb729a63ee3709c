//! Wall time of the completeness check on the matching family and its
//! doubled embedding. Reported, not asserted: the recursion's bound is only
//! known empirically.

use std::time::Instant;

use simplegames::duality::{is_complete, is_dual_pair};
use simplegames::families::{example3, example3_dual};
use simplegames::oracle::OracleLimit;
use simplegames::reduction::reduce_pair;
use simplegames::regular::shift_oracle::shift_is_complete_oracle;

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

fn main() {
    println!("{:>2} {:>6} {:>12} {:>6} {:>6} {:>12}", "m", "|K|", "plain dual s", "|H'|", "|K'|", "inclusion s");
    for m in 2..=8 {
        let (h, k) = (example3(m), example3_dual(m));
        let (plain, t_plain) = timed(|| is_dual_pair(&h, &k).expect("same ground set").is_dual());
        assert!(plain);
        let pair = reduce_pair(&h, &k).expect("same ground set");
        let (complete, t_emb) = timed(|| is_complete(&pair.hp, &pair.kp).expect("same ground set"));
        // under the shift order the pair is complete; only the exhaustive check exists
        let shift = (m <= 5).then(|| timed(|| shift_is_complete_oracle(&pair.hp, &pair.kp, OracleLimit(20)).unwrap()));
        let shift = shift.map_or("-".to_string(), |(ok, t)| format!("{t:.6} (complete={ok})"));
        println!(
            "{m:>2} {:>6} {t_plain:>12.6} {:>6} {:>6} {t_emb:>12.6}  complete={complete}  shift oracle s: {shift}",
            k.len(),
            pair.hp.len(),
            pair.kp.len()
        );
    }
}
