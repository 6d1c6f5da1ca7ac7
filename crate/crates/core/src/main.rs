use faer::Mat;
fn main() {
    for n in [64usize, 256, 512] {
        let mut a = Mat::<f64>::zeros(n, n);
        for i in 0..n {
            let j = (i + 1) % n;
            // nonsymmetric row-stochastic-ish
            a[(i, j)] = 0.7;
            a[(j, i)] += 0.3;
            a[(i, (i + 7) % n)] += 0.3;
            a[((i + 7) % n, i)] += 0.7;
        }
        let t0 = std::time::Instant::now();
        let ev: Vec<faer::complex_native::c64> = a.eigenvalues();
        let mx = ev.iter().map(|z| z.re).fold(f64::MIN, f64::max);
        println!("n={n} faer general eig {:?} max_re={:.4} count={}", t0.elapsed(), mx, ev.len());
    }
}
