use grnplus::diffcore::Scalar;
use std::time::Instant;

fn bench(m: usize, k: usize, n: usize, reps: usize) -> f64 {
    let a = vec![1.0f32; m * k];
    let b = vec![1.0f32; k * n];
    let mut c = vec![0.0f32; m * n];
    let start = Instant::now();
    for _ in 0..reps {
        f32::gemm(m, k, n, 1.0, &a, &b, 0.0, &mut c);
    }
    let secs = start.elapsed().as_secs_f64();
    (m * k * n * reps) as f64 / secs / 1e9
}

#[test]
fn gemm_throughput() {
    for (m, k, n) in [
        (128usize, 2304usize, 256usize),
        (32, 576, 4096),
        (16, 288, 16384),
        (192, 1728, 1024),
        (96, 864, 1024),
        (256, 1152, 64),
    ] {
        let gmacs = bench(m, k, n, 20);
        println!("gemm {m}x{k}x{n}: {gmacs:.2} GMAC/s");
    }
}
