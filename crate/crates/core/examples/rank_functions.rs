//! Expectile rank functions: for a point z, the downward rank is the
//! smallest level alpha at which z enters the downward cone expectile set,
//! and the upward rank is the largest level at which z is in the upward
//! set. They grade how "outstanding" z is relative to the sample, and they
//! induce complete preorders on R^d.
//!
//! Run with `cargo run --example rank_functions`.

use cone_expectiles::{
    compare, downward_expectile, infer_cone_order, rank, ConeSpec, OrderVerdict, WeightedSample,
};

fn main() -> cone_expectiles::Result<()> {
    let x = WeightedSample::uniform(vec![
        vec![5.0, 2.0],
        vec![4.0, -1.0],
        vec![3.0, 1.0],
    ])?;
    let cone = ConeSpec::orthant(2);

    for z in [[3.6, 0.0], [4.0, 2.0 / 3.0], [4.4, 1.2], [10.0, 10.0]] {
        let r = rank(&z, &x, &cone)?;
        println!(
            "z = {z:?}: downward rank {:.4}, upward rank {:.4}",
            r.downward, r.upward
        );
    }

    // The sublevel characterization: z is in the downward set at alpha iff
    // its downward rank is <= alpha.
    let z = [3.8, 0.3];
    let r = rank(&z, &x, &cone)?;
    for alpha in [0.2, 0.4, 0.45] {
        let inside = downward_expectile(&x, &cone, alpha)?.contains(&z, 1e-12)?;
        println!(
            "alpha = {alpha}: rank {:.4} {} alpha, membership {}",
            r.downward,
            if r.downward <= alpha { "<=" } else { ">" },
            inside
        );
    }

    // Rank comparisons certify the cone order when the hypothesis
    // "downward rank of y <= upward rank of z" holds.
    let inf = infer_cone_order(&[3.6, 0.0], &[4.4, 1.2], &x, &cone)?;
    println!("\n(3.6,0) vs (4.4,1.2): verdict {:?}", inf.verdict);
    assert_eq!(inf.verdict, OrderVerdict::Leq);

    // A symmetric pair: jointly indifferent in rank, yet incomparable in
    // the cone order - the ranks alone cannot separate them.
    let sym = WeightedSample::uniform(vec![vec![1.0, 0.0], vec![0.0, 1.0]])?;
    let report = compare(&[1.0, 0.0], &[0.0, 1.0], &sym, &cone)?;
    println!(
        "\nsymmetric pair: joint indifference {}, verdict {:?}",
        report.joint_indifferent,
        infer_cone_order(&[1.0, 0.0], &[0.0, 1.0], &sym, &cone)?.verdict
    );
    Ok(())
}
