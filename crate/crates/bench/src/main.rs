use faer::{Mat, Side};
use std::time::Instant;

fn main() {
    for n in [100usize, 719, 1400] {
        let a = Mat::from_fn(n, n, |i, j| if i == j { n as f64 } else { 1.0 / (1.0 + (i as f64 - j as f64).abs()) });
        let t = Instant::now();
        let mut f = None;
        for _ in 0..10 {
            f = Some(a.llt(Side::Lower).unwrap());
        }
        let el = t.elapsed().as_secs_f64() / 10.0;
        println!("n={n}: llt {:.2} ms, l00={:.3}", el * 1e3, f.unwrap().L()[(0, 0)]);
    }
}
