//! Order-preserving parallel map with an explicit parallelism degree.
//! Batch certifier and integration loops hand their independent work items
//! through here; results come back in input order regardless of `jobs`.

pub fn parallel_map<T, U, F>(jobs: usize, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs.min(items.len()));
    let mut out: Vec<Option<U>> = (0..items.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (in_chunk, out_chunk) in items.chunks(chunk).zip(out.chunks_mut(chunk)) {
            let f = &f;
            scope.spawn(move || {
                for (slot, item) in out_chunk.iter_mut().zip(in_chunk) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    out.into_iter().map(|v| v.expect("worker filled slot")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order_for_any_degree() {
        let items: Vec<i64> = (0..103).collect();
        let seq = parallel_map(1, &items, |x| x * x);
        for jobs in [2usize, 3, 8, 64] {
            assert_eq!(parallel_map(jobs, &items, |x| x * x), seq);
        }
    }
}
