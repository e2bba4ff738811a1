use dyckflaw::enumerate::tabulate;

#[test]
fn tabulation_is_independent_of_thread_count() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| tabulate(11))
    };
    let one = run(1);
    for threads in [2, 4] {
        let many = run(threads);
        for (a, b) in one.iter().zip(&many) {
            assert_eq!(a.to_json(), b.to_json(), "{threads} threads");
        }
    }
}
