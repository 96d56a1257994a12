#!/usr/bin/env python3
"""Extract allcurves-format fixtures from a PARI elldata directory.

PARI's elldata package is a transcription of Cremona's tables: files named
ell<k> hold every curve with conductor in [1000k, 1000k+999], in Cremona
order, with the Mordell-Weil generators attached.  This script writes the
subset selected by --divisors-of / --up-to in the plain text format read by
the C++ loader:

    <conductor> <class> <index> [a1,a2,a3,a4,a6] <rank> <torsion>

Rank is the number of stored generators.  Torsion orders are computed with
cypari when it is importable; otherwise the column is omitted.
"""

import argparse
import os
import re
import sys

ENTRY = re.compile(r'\["(\d+)([a-z]+)(\d+)",\[([-0-9,]+)\],\[(.*?)\]\]')


def divisors(n):
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def count_generators(text):
    # generators are [x,y] pairs; count top-level brackets
    depth = 0
    count = 0
    for ch in text:
        if ch == '[':
            if depth == 0:
                count += 1
            depth += 1
        elif ch == ']':
            depth -= 1
    return count


class ElldataReader:
    def __init__(self, directory):
        self.directory = directory
        self.cache = {}

    def curves(self, conductor):
        chunk = conductor // 1000
        if chunk not in self.cache:
            path = os.path.join(self.directory, 'ell%d' % chunk)
            if not os.path.exists(path):
                raise SystemExit('missing elldata file %s' % path)
            by_conductor = {}
            with open(path) as f:
                text = f.read()
            for m in ENTRY.finditer(text):
                n = int(m.group(1))
                ainvs = [int(v) for v in m.group(4).split(',')]
                rank = count_generators(m.group(5))
                by_conductor.setdefault(n, []).append(
                    (n, m.group(2), int(m.group(3)), ainvs, rank))
            self.cache[chunk] = by_conductor
        return self.cache[chunk].get(conductor, [])


def torsion_order(ainvs):
    try:
        from cypari import pari
    except ImportError:
        return None
    return int(pari.elltors(pari.ellinit(ainvs))[0])


def main():
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument('--elldata', required=True, help='directory with ell<k> files')
    ap.add_argument('--divisors-of', type=int, action='append', default=[],
                    help='emit every curve whose conductor divides N (repeatable)')
    ap.add_argument('--up-to', type=int, help='emit every curve with conductor <= B')
    ap.add_argument('-o', '--output', help='output file (default stdout)')
    args = ap.parse_args()

    if not args.divisors_of and args.up_to is None:
        ap.error('need --divisors-of or --up-to')

    conductors = set()
    for n in args.divisors_of:
        conductors.update(divisors(n))
    if args.up_to is not None:
        conductors.update(range(11, args.up_to + 1))

    reader = ElldataReader(args.elldata)
    out = open(args.output, 'w') if args.output else sys.stdout
    out.write('# Cremona elliptic curve tables (via PARI elldata)\n')
    for n in args.divisors_of:
        out.write('# coverage: divisors-of %d\n' % n)
    if args.up_to is not None:
        out.write('# coverage: up-to %d\n' % args.up_to)
    for n in sorted(conductors):
        for cond, cls, idx, ainvs, rank in reader.curves(n):
            fields = [str(cond), cls, str(idx),
                      '[' + ','.join(str(a) for a in ainvs) + ']', str(rank)]
            tors = torsion_order(ainvs)
            if tors is not None:
                fields.append(str(tors))
            out.write(' '.join(fields) + '\n')
    if out is not sys.stdout:
        out.close()


if __name__ == '__main__':
    main()
