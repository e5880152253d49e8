"""Test-wide setup: high ambient mpmath precision so that comparisons done
in test bodies never round computed values down to the default 15 digits.
Library code always enters its own working precision regardless."""

import mpmath as mp

mp.mp.dps = 120
