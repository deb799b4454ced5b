use ordhyper::cli::{run, THREADS_ENV};

fn main() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse::<usize>().ok()) {
        // ignore failure: the pool may already be initialised
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let (code, out) = run(std::env::args_os());
    if !out.is_empty() {
        if code == 0 {
            println!("{out}");
        } else {
            eprintln!("{out}");
        }
    }
    std::process::exit(code);
}
