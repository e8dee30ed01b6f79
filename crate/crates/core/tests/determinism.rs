use iomkit::search::{find_models, ClassFlag, ModelSpec};

fn run_with_threads(threads: usize, spec: &ModelSpec) -> iomkit::search::SearchResult {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    pool.install(|| find_models(spec).unwrap())
}

#[test]
fn search_results_do_not_depend_on_thread_count() {
    for n in 1..=5 {
        let spec = ModelSpec::new(n);
        let one = run_with_threads(1, &spec);
        for threads in [2, 4, 8] {
            assert_eq!(run_with_threads(threads, &spec), one, "n = {n}, threads = {threads}");
        }
    }
    let spec = ModelSpec { limit: Some(2), ..ModelSpec::new(6) }.require(&[ClassFlag::Iom]).forbid(&[ClassFlag::Qw]);
    let one = run_with_threads(1, &spec);
    assert_eq!(run_with_threads(4, &spec), one);
}

#[test]
fn repeated_runs_are_identical() {
    let spec = ModelSpec::new(5).require(&[ClassFlag::Iom]);
    let first = find_models(&spec).unwrap();
    for _ in 0..3 {
        assert_eq!(find_models(&spec).unwrap(), first);
    }
}
