use std::io::Write;

fn main() {
    if let Some(n) = std::env::var("NCQM_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .ok();
    }
    let (code, out) = ncqm::cli::run(std::env::args_os());
    let _ = writeln!(std::io::stdout().lock(), "{out}");
    std::process::exit(code);
}
