"""
@author: rydcalc contributors

Non-polytopality witnesses for OG(2,2n): collinear triples whose structure constants alternate
between zero and nonzero. Call with `python exp_witness.py <save> <n_max>`.
"""
import sys

if len(sys.argv) > 2:
    save = sys.argv[1] == 'True'
    n_max = int(sys.argv[2])
else:
    save = False
    n_max = 8

#%%
import numpy as np
import pandas as pd

from rydcalc.rules.nonzero import find_nonconvexity_witness, find_zero_set_witness, find_encoding_witnesses

rows = list()
for n in range(4, n_max + 1):
    W = find_nonconvexity_witness(n)
    for nu, v, nz in zip(W['nus'], W['values'], W['nonzero']):
        rows.append({'n': n, 'encoding': W['encoding'], 'lambda': W['lambda'].text, 'mu': W['mu'].text,
                     'nu': nu.text, 'coeff': v, 'nonzero': nz})
    print(f"n = {n}: labels {W['nonzero']}, collinear {W['collinear']}, alternating {W['alternating']}")

#%% the zero set of OG(2,8), and OG(2,10) in the columns and charged encodings

extra = [find_zero_set_witness()] + list(find_encoding_witnesses().values())

for W in extra:
    for nu, v, nz in zip(W['nus'], W['values'], W['nonzero']):
        rows.append({'n': W['n'], 'encoding': W['encoding'], 'lambda': W['lambda'].text, 'mu': W['mu'].text,
                     'nu': nu.text, 'coeff': v, 'nonzero': nz})
    print(f"n = {W['n']}, {W['encoding']}, {W['lambda'].text} * {W['mu'].text}: labels {W['nonzero']}, alternating {W['alternating']}")

df = pd.DataFrame(rows)
print(df)

#%%
if save:
    df.to_csv('../data/output/witnesses_n' + str(n_max) + '.csv', index = False)
    np.save('../data/output/witnesses_n' + str(n_max) + '.npy', df.to_dict('list'))
