"""
@author: rydcalc contributors

Runs all verification suites of a setup, see `../data/setups` for examples.
Call with `python exp_verify.py <save> <setup_id>`.
"""
import sys

if len(sys.argv) > 2:
    save = sys.argv[1] == 'True'
    setup_id = sys.argv[2]
else:
    save = False
    setup_id = 'quick'

#%%
import time

from rydcalc.experiments.verify_utils import run_setup

start = time.time()
report = run_setup(setup_id, verbose = True)

print("Total runtime:", round(time.time() - start, 1), "seconds")
print("Runs with failures:", (report['failures'] > 0).sum())

#%% summary per suite

summary = report.groupby('suite').agg(runs = ('n', 'size'), checked = ('checked', 'sum'), failures = ('failures', 'sum'),
                                      runtime = ('runtime', 'sum'))
print(summary)

if save:
    report.to_csv('../data/output/verify_' + setup_id + '.csv', index = False)
