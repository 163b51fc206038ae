//! Randomized invariants.

use proptest::prelude::*;

use normord_core::analyzer::{exceptional_density, Slope};
use normord_core::moments::{
    hyperbola_divisor_sum, moment_sum, moment_sum_streaming, MomentKind, Schedule,
};
use normord_core::sieve::{brute_oracle, build_table, stream_segments, FunctionId, FunctionSet};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sieve_agrees_with_brute_oracle(n in 1u64..50_000) {
        let t = build_table(n, FunctionSet::ALL).unwrap();
        for f in FunctionId::ALL {
            prop_assert_eq!(t.value(f, n), brute_oracle(n, f));
        }
    }

    #[test]
    fn streaming_covers_range_once_in_order(limit in 1u64..5_000, seg in 1u64..700) {
        let mut expected = 1u64;
        stream_segments(limit, seg, FunctionSet::single(FunctionId::Mu), |s| {
            assert_eq!(s.lo(), expected);
            assert!(s.hi() >= s.lo() && s.hi() - s.lo() + 1 <= seg);
            expected = s.hi() + 1;
        }).unwrap();
        prop_assert_eq!(expected, limit + 1);
    }

    #[test]
    fn streaming_sums_equal_materialized(limit in 1u64..20_000, seg in 1u64..4_096) {
        let sched = Schedule::single(limit);
        for f in [FunctionId::Phi, FunctionId::DivisorCount] {
            let a = moment_sum(f, MomentKind::Second, limit, &sched).unwrap();
            let b = moment_sum_streaming(f, MomentKind::Second, limit, seg, &sched).unwrap();
            prop_assert_eq!(a.final_sum(), b.final_sum());
        }
    }

    #[test]
    fn hyperbola_equals_sieve_first_moment(limit in 1u64..30_000) {
        let s = moment_sum(FunctionId::DivisorCount, MomentKind::First, limit,
                           &Schedule::single(limit)).unwrap();
        prop_assert_eq!(hyperbola_divisor_sum(limit).unwrap(), s.final_sum());
    }

    #[test]
    fn density_monotone_in_epsilon(limit in 100u64..3_000, e1 in 1u64..50, e2 in 1u64..50) {
        let (small, large) = (e1.min(e2), e1.max(e2));
        let slope = Slope::from_q64((3u128 << 64) / 5);
        let d_small = exceptional_density(FunctionId::Phi, (small, 100), slope, limit, 512).unwrap();
        let d_large = exceptional_density(FunctionId::Phi, (large, 100), slope, limit, 512).unwrap();
        prop_assert!(d_large.exceptional_count <= d_small.exceptional_count);
    }

    #[test]
    fn schedule_is_ascending_and_ends_at_limit(limit in 1u64..10_000_000, ratio in 1.01f64..4.0) {
        let sched = Schedule::geometric(limit, 1000, ratio).unwrap();
        let pts = sched.points();
        prop_assert!(pts.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(*pts.last().unwrap(), limit);
    }
}
