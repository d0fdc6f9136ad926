use cuf_iga_bench::spec::{Boundary, Geometry};
use cuf_iga_bench::{builtin, run_case, run_cases, BenchError};

#[test]
fn repeated_runs_are_bitwise_identical() {
    let spec = builtin::find("table1-cubic-5").unwrap();
    let a = run_case(&spec).unwrap();
    let b = run_case(&spec).unwrap();
    for (x, y) in a.outputs.iter().zip(&b.outputs) {
        assert_eq!(x.value.to_bits(), y.value.to_bits(), "{}", x.label);
    }
    assert_eq!(a.metadata, b.metadata);
}

#[test]
fn parallel_runs_keep_input_order_and_values() {
    let specs: Vec<_> = [
        "table4-quadratic-5",
        "table1-quadratic-5",
        "table3-ah10-quadratic",
    ]
    .iter()
    .map(|n| builtin::find(n).unwrap())
    .collect();
    let results = run_cases(&specs);
    for (spec, r) in specs.iter().zip(&results) {
        let r = r.as_ref().unwrap();
        assert_eq!(r.name, spec.name);
        let alone = run_case(spec).unwrap();
        assert_eq!(r.outputs, alone.outputs);
    }
}

#[test]
fn metadata_records_conventions() {
    let r = run_case(
        &builtin::find("table8-theta0")
            .map(|mut s| {
                s.mesh = 2;
                s
            })
            .unwrap(),
    )
    .unwrap();
    assert_eq!(r.metadata.frequency_length.as_deref(), Some("diameter"));
    assert!(r.metadata.boundary.starts_with("clamped"));
    assert_eq!(r.metadata.alpha, Some(0.1));
    // 9 unknowns per point, cubic 2x2 has 5x5 points, the outer ring of 16 is fixed
    assert_eq!(r.metadata.free_unknowns, 9 * 9);
    let omega: Vec<f64> = (1..=3)
        .map(|i| r.output(&format!("omega{i}")).unwrap())
        .collect();
    assert!(omega.windows(2).all(|w| w[0] <= w[1]), "{omega:?}");

    let s = run_case(&builtin::find("table1-quadratic-5").unwrap()).unwrap();
    assert!(s.metadata.boundary.starts_with("simply supported"));
    assert_eq!(s.metadata.interface_side, "layer nearer the midplane");
    assert_eq!(s.metadata.load_z_over_h, Some(0.0));
}

#[test]
fn flexural_selection_skips_in_plane_modes() {
    let mut spec = builtin::find("table6-ah2-quadratic").unwrap();
    spec.mesh = 4;
    let flexural = run_case(&spec).unwrap().output("omega1").unwrap();
    let cuf_iga_bench::spec::OutputQuantity::Frequency { family, .. } =
        &mut spec.outputs[0].quantity
    else {
        panic!()
    };
    *family = cuf_iga_bench::spec::ModeFamily::Any;
    let lowest = run_case(&spec).unwrap().output("omega1").unwrap();
    assert!(lowest < flexural * 0.95, "{lowest} vs {flexural}");
}

#[test]
fn solver_errors_carry_the_case_name() {
    let mut spec = builtin::find("table3-ah1000-quadratic").unwrap();
    spec.name = "locked".into();
    spec.stabilization.enabled = false;
    match run_case(&spec) {
        Err(BenchError::Case { case, source }) => {
            assert_eq!(case, "locked");
            assert!(matches!(source, cuf_iga::Error::Singular(_)), "{source}");
        }
        other => panic!("expected a case error, got {other:?}"),
    }
}

#[test]
fn invalid_specs_are_rejected_before_running() {
    let mut spec = builtin::find("table8-theta0").unwrap();
    spec.degree = 1;
    assert!(matches!(run_case(&spec), Err(BenchError::Spec(_))));
    let mut spec = builtin::find("table1-cubic-5").unwrap();
    spec.geometry = Geometry::Circle;
    spec.boundary = Boundary::Clamped;
    assert!(matches!(run_case(&spec), Err(BenchError::Spec(_))));
}
