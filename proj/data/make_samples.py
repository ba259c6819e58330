"""Regenerates the bundled sample inputs (deterministic).

kilmore_sample.csv  synthetic interaction log whose cumulative actor, link and
                    interaction counts per period are 43/58/76/98 actors,
                    46/86/115/153 links and 73/153/213/286 interactions.
coauthor_sample.jsonl  synthetic co-authorship corpus, 2001-2010.
"""
import json
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

# (new actors, new links, total interactions) per period, and the time window.
PERIODS = [
    (43, 46, 73, ("2009-02-06T08:00", "2009-02-07T11:50")),
    (15, 40, 80, ("2009-02-07T11:51", "2009-02-07T13:05")),
    (18, 29, 60, ("2009-02-07T13:06", "2009-02-07T16:00")),
    (22, 38, 73, ("2009-02-07T16:01", "2009-02-07T23:59")),
]
ROLES = ["IC", "DIC", "PO", "OPS", "LOG", "ICC", "CFA", "DSE", "POL", "AMB", "SES", "MUN"]


def minutes(ts):
    date, clock = ts.split("T")
    day = int(date[-2:])
    h, m = map(int, clock.split(":"))
    return day * 1440 + h * 60 + m


def stamp(total):
    day, rest = divmod(total, 1440)
    return f"2009-02-{day:02d}T{rest // 60:02d}:{rest % 60:02d}"


def kilmore(rng):
    actors, links, rows = [], set(), []
    degree = {}
    counter = {}

    def new_actor():
        role = rng.choice(ROLES)
        counter[role] = counter.get(role, 0) + 1
        name = f"{role}{counter[role]}"
        actors.append(name)
        degree[name] = 0
        return name

    def pick_existing(exclude):
        pool = [a for a in actors if a != exclude]
        weights = [degree[a] + 1 for a in pool]
        return rng.choices(pool, weights)[0]

    def add_link(a, b):
        links.add(tuple(sorted((a, b))))
        degree[a] += 1
        degree[b] += 1

    for new_n, new_l, total_w, (start, end) in PERIODS:
        t0, t1 = minutes(start), minutes(end)
        events = []
        added = 0
        for _ in range(new_n):
            fresh = new_actor()
            if len(actors) > 1:
                other = pick_existing(fresh)
                add_link(fresh, other)
                events.append((fresh, other))
                added += 1
        while added < new_l:
            a = rng.choice(actors)
            # close a triangle half of the time
            nbrs = [y if x == a else x for x, y in links if a in (x, y)]
            if nbrs and rng.random() < 0.5:
                mid = rng.choice(nbrs)
                cands = [y if x == mid else x for x, y in links if mid in (x, y)]
                b = rng.choice(cands)
            else:
                b = pick_existing(a)
            if a == b or tuple(sorted((a, b))) in links:
                continue
            add_link(a, b)
            events.append((a, b))
            added += 1
        ordered = sorted(links)
        while len(events) < total_w:
            events.append(rng.choice(ordered))
        for a, b in events:
            rows.append((stamp(rng.randint(t0, t1)), a, b))
    rng.shuffle(rows)
    with open(HERE / "kilmore_sample.csv", "w", newline="\n") as f:
        f.write("time,a,b,weight\n")
        for t, a, b in rows:
            f.write(f"{t},{a},{b},1\n")


def coauthors(rng):
    authors, papers = [], {}
    out = []
    pid = 0
    for year in range(2001, 2011):
        for _ in range(40 + 12 * (year - 2001)):
            k = rng.choice([1, 2, 2, 3, 3, 3, 4, 4, 5, 6])
            team = []
            while len(team) < k:
                if not authors or rng.random() < 0.45:
                    name = f"Author {len(authors) + 1:04d}"
                    authors.append(name)
                    papers[name] = 0
                else:
                    name = rng.choices(authors, [papers[a] + 1 for a in authors])[0]
                if name not in team:
                    team.append(name)
            for a in team:
                papers[a] += 1
            pid += 1
            date = f"{year}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
            out.append({"pub_id": f"P{pid:05d}", "date": date, "authors": team})
    with open(HERE / "coauthor_sample.jsonl", "w", newline="\n") as f:
        for rec in out:
            f.write(json.dumps(rec) + "\n")


if __name__ == "__main__":
    kilmore(random.Random(2009))
    coauthors(random.Random(2010))
