fn main() {
    // Restore default SIGPIPE so `sosrank matrix ... | head` terminates
    // quietly instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(sosrank::cli::run_from_env());
}
