"""Jitted hot loop for the exhaustive labeled-tree oracle.

Iterates every length-(n-2) sequence over n labels, decodes it to the
labeled tree it encodes, drops trees violating the degree cap, and
emits a canonical packed code per surviving tree.  Canonical packing:
the centroid-rooted maximal level sequence, 4 bits per depth entry,
first entry in the most significant used nibble.  With n <= 9 a code
is at most 9 nibbles and depths stay below 16, so one uint64 per tree
suffices and numeric order on width-aligned values equals
lexicographic order on level sequences.
"""
import numpy as np
from numba import njit, uint64


@njit(cache=True)
def packed_codes(n, cap):
    """Packed canonical codes of every labeled tree on n vertices whose
    Prufer sequence uses no label more than cap times (degree <= cap+1),
    one entry per accepted labeled tree, duplicates included."""
    seqlen = n - 2
    total = n ** seqlen
    out = np.empty(total, dtype=np.uint64)
    nout = 0
    rep1 = np.zeros(n + 1, dtype=np.uint64)
    for k in range(1, n + 1):
        rep1[k] = (rep1[k - 1] << uint64(4)) | uint64(1)
    seq = np.zeros(seqlen, dtype=np.int64)
    counts = np.zeros(n, dtype=np.int64)
    degc = np.zeros(n, dtype=np.int64)
    size = np.zeros(n, dtype=np.int64)
    maxch = np.zeros(n, dtype=np.int64)
    adj = np.zeros((n, n), dtype=np.int64)
    adjc = np.zeros(n, dtype=np.int64)
    order = np.zeros(n, dtype=np.int64)
    seen = np.zeros(n, dtype=np.uint8)
    par = np.zeros(n, dtype=np.int64)
    packed = np.zeros(n, dtype=np.uint64)
    plen = np.zeros(n, dtype=np.int64)
    kid_key = np.zeros((n, n), dtype=np.uint64)
    kid_val = np.zeros((n, n), dtype=np.uint64)
    kid_len = np.zeros((n, n), dtype=np.int64)
    kid_cnt = np.zeros(n, dtype=np.int64)
    width = uint64(4 * (n - 1))
    while True:
        ok = True
        for i in range(n):
            counts[i] = 0
        for i in range(seqlen):
            s = seq[i]
            counts[s] += 1
            if counts[s] > cap:
                ok = False
                break
        if ok:
            # pointer decode; subtree sizes fall out because a removed
            # leaf's subtree is final the moment it is attached
            for i in range(n):
                degc[i] = counts[i] + 1
                size[i] = 1
                maxch[i] = 0
                adjc[i] = 0
            ptr = 0
            leaf = -1
            for i in range(seqlen):
                s = seq[i]
                if leaf < 0:
                    while degc[ptr] != 1:
                        ptr += 1
                    leaf = ptr
                    ptr += 1
                adj[leaf, adjc[leaf]] = s
                adjc[leaf] += 1
                adj[s, adjc[s]] = leaf
                adjc[s] += 1
                sz = size[leaf]
                size[s] += sz
                if sz > maxch[s]:
                    maxch[s] = sz
                degc[leaf] = 0
                degc[s] -= 1
                if degc[s] == 1 and s < ptr:
                    leaf = s
                else:
                    leaf = -1
            if leaf < 0:
                while degc[ptr] != 1:
                    ptr += 1
                leaf = ptr
                ptr += 1
            last = ptr
            while degc[last] != 1 or last == leaf:
                last += 1
            adj[leaf, adjc[leaf]] = last
            adjc[leaf] += 1
            adj[last, adjc[last]] = leaf
            adjc[last] += 1
            sz = size[leaf]
            size[last] += sz
            if sz > maxch[last]:
                maxch[last] = sz
            # centroids, orientation rooted at the decode's last vertex
            best = n + 1
            c1 = -1
            c2 = -1
            for x in range(n):
                w = n - size[x]
                if maxch[x] > w:
                    w = maxch[x]
                if w < best:
                    best = w
                    c1 = x
                    c2 = -1
                elif w == best:
                    c2 = x
            bestc = uint64(0)
            r = c1
            while True:
                order[0] = r
                for i in range(n):
                    seen[i] = 0
                seen[r] = 1
                qn = 1
                qi = 0
                while qi < qn:
                    x = order[qi]
                    qi += 1
                    for j in range(adjc[x]):
                        y = adj[x, j]
                        if seen[y] == 0:
                            seen[y] = 1
                            par[y] = x
                            order[qn] = y
                            qn += 1
                for i in range(n):
                    kid_cnt[i] = 0
                # reverse BFS order: children fold before their parent
                for i in range(n - 1, -1, -1):
                    x = order[i]
                    kc = kid_cnt[x]
                    if kc > 0:
                        for a in range(1, kc):
                            ka = kid_key[x, a]
                            kv = kid_val[x, a]
                            kl = kid_len[x, a]
                            b = a - 1
                            while b >= 0 and kid_key[x, b] < ka:
                                kid_key[x, b + 1] = kid_key[x, b]
                                kid_val[x, b + 1] = kid_val[x, b]
                                kid_len[x, b + 1] = kid_len[x, b]
                                b -= 1
                            kid_key[x, b + 1] = ka
                            kid_val[x, b + 1] = kv
                            kid_len[x, b + 1] = kl
                        acc = uint64(0)
                        tot = 1
                        for a in range(kc):
                            length = kid_len[x, a]
                            acc = (acc << uint64(4 * length)) | kid_val[x, a]
                            tot += length
                        packed[x] = acc
                        plen[x] = tot
                    else:
                        packed[x] = uint64(0)
                        plen[x] = 1
                    if x != r:
                        p = par[x]
                        length = plen[x]
                        shifted = packed[x] + rep1[length]
                        kid_key[p, kid_cnt[p]] = shifted << (width - uint64(4 * length))
                        kid_val[p, kid_cnt[p]] = shifted
                        kid_len[p, kid_cnt[p]] = length
                        kid_cnt[p] += 1
                if packed[r] > bestc:
                    bestc = packed[r]
                if c2 < 0 or r == c2:
                    break
                r = c2
            out[nout] = bestc
            nout += 1
        p = seqlen - 1
        while p >= 0 and seq[p] == n - 1:
            seq[p] = 0
            p -= 1
        if p < 0:
            break
        seq[p] += 1
    return out[:nout]
