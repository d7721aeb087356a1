# Copyright 2026 The SumLens Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Builds tests/data/sample_scale.tsv, the sample-scale annotation fixture.

The fixture is one 85-sentence document whose specific concepts have fixed
sentence frequencies. Two searches fill in what frequencies alone leave open:

  1. Sentence placement of the concepts seen in three or more sentences, so
     that the multi-concept frequent itemsets at minimum supports 3, 6 and 9
     number 83, 7 and 6.
  2. Paragraph boundaries, per-sentence mention counts and placement of the
     rarer concepts, so that the concepts with meaning above 1, 0.5, 0 and
     -0.5 (natural log) number 9, 19, 175 and 186.

Generic concepts take the remaining mentions, one each, so that the document
has 1042 mentions and 440 distinct concepts. Both searches are seeded, so the
output is reproducible. Usage: make_sample_fixture.py OUTPUT_TSV
"""

import math
import random
import sys

SENTENCES = 85
PARAGRAPHS = 10
MENTIONS = 1042
GENERIC_CONCEPTS = 206
SPECIFIC_TYPE = "Disease or Syndrome"
GENERIC_TYPE = "Qualitative Concept"

TOP = ["schizophrenia", "bipolar", "autism", "deletion", "cnv", "genome",
       "chrom", "nrxn1"]


def popcount(x):
  return bin(x).count("1")


def itemset_buckets(sets):
  """Multi-concept frequent itemsets (support >= 3) by support 9+, 6-8, 3-5."""
  masks = {}
  for name, sentences in sets.items():
    m = 0
    for s in sentences:
      m |= 1 << s
    masks[name] = m
  level = {(a,): masks[a] for a in sorted(masks) if popcount(masks[a]) >= 3}
  counts = [0, 0, 0]
  while level:
    keys = sorted(level)
    nxt = {}
    for i, a in enumerate(keys):
      for b in keys[i + 1:]:
        if a[:-1] != b[:-1]:
          break
        cand = a + (b[-1],)
        if any(tuple(x for x in cand if x != d) not in level for d in cand):
          continue
        m = level[a] & masks[b[-1]]
        support = popcount(m)
        if support >= 3:
          nxt[cand] = m
          counts[0 if support >= 9 else 1 if support >= 6 else 2] += 1
    level = nxt
  return counts


def place_frequent(rng):
  """Stage 1: sentence sets of the concepts with frequency >= 3."""
  sets = {
      "schizophrenia": set(range(0, 30)),
      "bipolar": set(range(30, 50)),
      "autism": set(range(50, 69)),
      # Planted pairs: six of support >= 9 and one of support 7.
      "deletion": set(range(0, 10)) | set(range(30, 37)),
      "cnv": set(range(12, 21)) | set(range(40, 43)) | set(range(60, 63)),
      "genome": set(range(38, 47)) | {22, 24, 26, 51, 53},
      "chrom": set(range(50, 59)) | {27, 47},
      "nrxn1": set(range(59, 68)) | {28, 48},
      "f9_0": set(range(20, 29)),
  }
  free = []
  for freq, count in [(8, 9), (7, 7), (4, 3), (3, 21)]:
    for i in range(count):
      name = f"f{freq}_{i}"
      sets[name] = set(rng.sample(range(SENTENCES), freq))
      free.append(name)
  target = [6, 1, 76]
  cost = lambda b: sum(abs(x - y) for x, y in zip(b, target))
  current = cost(itemset_buckets(sets))
  temperature = 0.5
  while current > 0:
    name = rng.choice(free)
    s = sets[name]
    out = rng.choice(sorted(s))
    into = rng.choice([x for x in range(SENTENCES) if x not in s])
    s.remove(out)
    s.add(into)
    c = cost(itemset_buckets(sets))
    if c <= current or rng.random() < math.exp(-(c - current) / temperature):
      current = c
    else:
      s.remove(into)
      s.add(out)
    temperature = max(0.05, temperature * 0.9995)
  return sets


THRESHOLDS = [1.0, 0.5, 0.0, -0.5]
MEANING_TARGET = [9, 19, 175, 186]


def paragraph_of(bounds):
  out, p = [], 0
  for s in range(SENTENCES):
    while p < len(bounds) and s >= bounds[p]:
      p += 1
    out.append(p)
  return out


def doc_meanings(mentions, bounds):
  para = paragraph_of(bounds)
  load = [0] * PARAGRAPHS
  per = {}
  for name, by_sentence in mentions.items():
    counts = {}
    for s, k in by_sentence.items():
      counts[para[s]] = counts.get(para[s], 0) + k
      load[para[s]] += k
    per[name] = counts
  total = sum(load)
  out = {}
  for name, counts in per.items():
    k = sum(counts.values())
    best = None
    for p, m in counts.items():
      n = total // load[p]
      c = math.comb(k, m)
      v = 0.0 if c == n ** (m - 1) else -(math.log(c) - (m - 1) * math.log(n)) / m
      best = v if best is None else max(best, v)
    out[name] = best
  return out, total


def meaning_cost(mentions, bounds, budget):
  values, total = doc_meanings(mentions, bounds)
  counts = [sum(1 for v in values.values() if v > t) for t in THRESHOLDS]
  c = sum(abs(x - y) for x, y in zip(counts, MEANING_TARGET))
  # Keep every value clear of the thresholds.
  c += sum(1 for v in values.values() for t in THRESHOLDS
           if v != 0.0 and abs(v - t) < 2e-3)
  return c + max(0, total - budget) * 0.5


def shape_meanings(rng, sets):
  """Stage 2: paragraphs, mention counts and the rare concepts."""
  mentions = {n: {s: 1 for s in sorted(ss)} for n, ss in sets.items()}
  movable = []
  for i in range(142):
    mentions[f"f1_{i}"] = {rng.randrange(SENTENCES): 1}
    movable.append(f"f1_{i}")
  for i in range(43):
    mentions[f"f2_{i}"] = {s: 1 for s in rng.sample(range(SENTENCES), 2)}
    movable.append(f"f2_{i}")
  bounds = sorted(rng.sample(range(1, SENTENCES), PARAGRAPHS - 1))
  budget = MENTIONS - GENERIC_CONCEPTS
  names = list(mentions)
  current = meaning_cost(mentions, bounds, budget)
  temperature = 3.0
  while current > 0:
    r = rng.random()
    if r < 0.5:
      name = rng.choice(names)
      s = rng.choice(list(mentions[name]))
      d = rng.choice([-1, 1])
      if mentions[name][s] + d < 1:
        continue
      mentions[name][s] += d
      undo = lambda: mentions[name].__setitem__(s, mentions[name][s] - d)
    elif r < 0.85:
      name = rng.choice(movable)
      s = rng.choice(list(mentions[name]))
      t = rng.randrange(SENTENCES)
      if t in mentions[name]:
        continue
      mentions[name][t] = mentions[name].pop(s)
      undo = lambda: mentions[name].__setitem__(s, mentions[name].pop(t))
    else:
      i = rng.randrange(PARAGRAPHS - 1)
      nb = bounds[i] + rng.choice([-1, 1])
      lo = bounds[i - 1] + 1 if i > 0 else 1
      hi = bounds[i + 1] - 1 if i < PARAGRAPHS - 2 else SENTENCES - 1
      if nb < lo or nb > hi:
        continue
      old = bounds[i]
      bounds[i] = nb
      undo = lambda: bounds.__setitem__(i, old)
    c = meaning_cost(mentions, bounds, budget)
    if c <= current or rng.random() < math.exp(-(c - current) / temperature):
      current = c
    else:
      undo()
    temperature = max(0.05, temperature * 0.99997)
  return mentions, bounds


def main():
  sets = place_frequent(random.Random(1))
  mentions, bounds = shape_meanings(random.Random(7), sets)
  para = paragraph_of(bounds)
  rename = {}
  specific = [n for n in mentions if n not in TOP]
  specific.sort(key=lambda n: (int(n[1:n.index("_")]), int(n[n.index("_") + 1:])))
  for i, n in enumerate(specific):
    rename[n] = f"s{i}"
  rows = []
  for name, by_sentence in mentions.items():
    for s, k in by_sentence.items():
      rows += [(s, rename.get(name, name), SPECIFIC_TYPE)] * k
  used = len(rows)
  extra = MENTIONS - used - GENERIC_CONCEPTS
  assert extra >= 0, used
  for g in range(GENERIC_CONCEPTS):
    copies = 1 + (1 if g < extra else 0)
    rows += [(g % SENTENCES, f"g{g}", GENERIC_TYPE)] * copies
  rows.sort(key=lambda r: (r[0], r[1]))
  with open(sys.argv[1], "w") as out:
    out.write("# sentence\tparagraph\tconcept_id\tsemantic_type\n")
    for s, name, kind in rows:
      out.write(f"{s}\t{para[s]}\t{name}\t{kind}\n")


if __name__ == "__main__":
  main()
