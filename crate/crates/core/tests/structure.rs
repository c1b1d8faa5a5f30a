//! Per-push layout and work bounds of the real-time engines.

use palstream::audit::{
    additive_layout, binary_occupancy, binary_size_bound, kary_occupancy, kary_size_bound,
};
use palstream::{
    gen_nu, gen_random, Additive, Engine, HashConfig, MultLarge, MultSmall, PushStats, Symbol,
    WindowedManacher,
};

fn streams() -> Vec<Vec<Symbol>> {
    vec![
        gen_random(20_000, 2, 1).unwrap(),
        gen_random(20_000, 4, 2).unwrap(),
        vec![7; 20_000],
        gen_nu(20_000),
    ]
}

#[test]
fn additive_layout_and_work() {
    for s in streams() {
        for e in [2, 5, 16] {
            let mut a = Additive::new(HashConfig::from_seed(21), e).unwrap();
            let mut prev = 0;
            for &x in &s {
                a.push(x);
                let i = a.pushed();
                let pos: Vec<u64> = a.checkpoints().map(|t| t.i).collect();
                additive_layout(&pos, i, a.spacing()).unwrap();
                assert_eq!(a.checkpoint_count() as u64, i / a.spacing());
                let st = a.last_stats();
                assert!(st.cursor_steps <= 2 && st.checks <= 2, "{st:?} at {i}");
                let len = a.answer().len;
                assert!(len >= prev && len <= prev + 2 * a.spacing());
                prev = len;
            }
        }
    }
}

#[test]
fn mult_small_layout_and_work() {
    for s in streams() {
        for eps in [1.0, 0.3] {
            let mut m = MultSmall::new(HashConfig::from_seed(22), eps).unwrap();
            let p = *m.params();
            for &x in &s {
                m.push(x);
                let i = m.pushed();
                let pos: Vec<u64> = m.checkpoints().map(|t| t.i).collect();
                binary_occupancy(&pos, i, &p).unwrap();
                assert!(pos.len() as u64 <= binary_size_bound(i, &p));
                assert_eq!(m.segments().value(), i);
                let st = m.last_stats();
                assert!(
                    st.cursor_steps <= 3 && st.checks <= 3 && st.deletions <= 1,
                    "{st:?}"
                );
            }
        }
    }
}

#[test]
fn mult_small_spacing() {
    let mut m = MultSmall::new(HashConfig::from_seed(23), 1.0).unwrap();
    for &x in &gen_random(5000, 3, 9).unwrap() {
        m.push(x);
        let pos: Vec<u64> = m.checkpoints().map(|t| t.i).collect();
        for w in pos.windows(4) {
            let (d, b, a) = (w[0], w[2], w[3]);
            assert!(b - a <= d - b, "{w:?}");
        }
    }
}

#[test]
fn mult_large_layout_and_work() {
    for s in streams() {
        for eps in [7.0, 13.0] {
            let mut m = MultLarge::new(HashConfig::from_seed(24), eps).unwrap();
            let p = *m.params();
            for &x in &s {
                m.push(x);
                let i = m.pushed();
                let pos: Vec<u64> = m.checkpoints().map(|t| t.i).collect();
                kary_occupancy(&pos, i, &p).unwrap();
                assert!(pos.len() as u64 <= kary_size_bound(i, &p));
                assert_eq!(m.segments().value(), i);
                let st = m.last_stats();
                assert!(
                    st.cursor_steps <= 3 && st.checks <= 3 && st.deletions <= 2,
                    "{st:?}"
                );
            }
        }
    }
}

#[test]
fn exact_window_work() {
    for s in streams() {
        for m in [1, 2, 9, 34, 100] {
            let mut e = WindowedManacher::new(m).unwrap();
            let mut peak = PushStats::default();
            for &x in &s {
                e.push(x);
                peak = peak.max(e.last_stats());
                assert!(e.queue_len() as u64 <= m / 2 + 2);
            }
            assert!(peak.inner_iterations <= 3);
            assert!(e.total_inner_iterations() <= 3 * e.pushed());
            assert!(e.max_queue_len() as u64 <= m / 2 + 2, "m = {m}");
        }
    }
}
