use bpcentre::arith::Prime;
use bpcentre::centre::{scan_stabilization, verify_centre_bp};

fn pr(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

#[test]
fn desk_scale_verdicts() {
    for (p, n) in [(2u64, 4usize), (3, 4), (5, 2)] {
        let r = verify_centre_bp(pr(p), n, None).unwrap();
        assert!(r.verdict, "p = {p}");
        assert!(r.realizable && r.full_weight_inclusion);
        for row in &r.rows {
            assert_eq!(row.pivots_adams, row.pivots_t);
            assert!(row.sandwich.equal);
        }
    }
}

#[test]
fn verdict_monotone_in_weight() {
    for (p, n, extra) in [(2u64, 2usize, 3u32), (3, 2, 3)] {
        let base = bpcentre::arith::delta_p(pr(p), n as u64) as u32;
        for w in base..=base + extra {
            let r = verify_centre_bp(pr(p), n, Some(w)).unwrap();
            assert!(r.verdict, "p = {p}, W = {w}");
        }
    }
}

#[test]
fn stabilization_scan_reaches_adams_lattice() {
    let s = scan_stabilization(pr(3), 2, 5).unwrap();
    eprintln!("{}", serde_json::to_string(&s).unwrap());
    assert!(s.points.last().unwrap().equals_adams);
    let s = scan_stabilization(pr(2), 3, 6).unwrap();
    eprintln!("{}", serde_json::to_string(&s).unwrap());
}
