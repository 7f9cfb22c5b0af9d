# period-2 oscillator: t is produced exactly when it is absent
background: t
- | t -> t
