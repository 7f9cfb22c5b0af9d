# two-input gate: c appears when a and b are both present and i is absent
background: a b c i
a b | i -> c
c | - -> c
