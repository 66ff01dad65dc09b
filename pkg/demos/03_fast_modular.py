"""Residues for huge rows via the base-p digit recursion.

Run: python3 demos/03_fast_modular.py
"""
import time

from extbinom import granville_mod, lucas_mod, parity, parse
from extbinom.modular import exact_mod

f = parse("table:0=3,1=2,2=1")

# Small enough to cross-check against the exact value.
for p in (2, 3, 5, 7):
    fast = granville_mod(40, 57, f, p)
    print(f"<40,57> mod {p}: digits {fast}, lucas {lucas_mod(40, 57, f, p)}, exact {exact_mod(40, 57, f, p)}")
print(f"parity recursion: {parity(40, 57, f)}")

# k = n = 10**9 is far beyond the exact path but the recursion only sees
# about log_p(k) digits.
for p in (2, 7):
    stats = {}
    start = time.perf_counter()
    value = granville_mod(10**9, 10**9, f, p, stats=stats)
    elapsed = time.perf_counter() - start
    print(
        f"<10^9,10^9> mod {p} = {value} in {elapsed * 1000:.2f} ms "
        f"(memo {stats['memo_size']}, depth {stats['max_depth']} of at most {stats['depth_bound']})"
    )
