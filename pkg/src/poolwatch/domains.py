"""Hostname normalization and registrable-domain reduction.

Stored records keep the raw (lowercased) hostname; dataset joins reduce to
the registrable domain so `www.a.com` and `a.com` land on the same key.
The multi-label suffix table below is a pruned snapshot of the public
suffix list covering the common country-code second-level registries; for
anything not in the table the registrable domain is the last two labels.
"""

from __future__ import annotations

from urllib.parse import urlsplit

# Two- and three-label public suffixes under which registration happens one
# label deeper (e.g. "a.co.uk" is registrable, "co.uk" is not).
_MULTI_LABEL_SUFFIXES = frozenset({
    # United Kingdom
    "co.uk", "org.uk", "me.uk", "ltd.uk", "plc.uk", "net.uk", "sch.uk",
    "ac.uk", "gov.uk", "nhs.uk",
    # Japan
    "co.jp", "ne.jp", "or.jp", "ac.jp", "ad.jp", "go.jp", "gr.jp", "lg.jp",
    # Australia
    "com.au", "net.au", "org.au", "edu.au", "gov.au", "asn.au", "id.au",
    # Brazil
    "com.br", "net.br", "org.br", "gov.br", "edu.br", "art.br", "blog.br",
    # China
    "com.cn", "net.cn", "org.cn", "gov.cn", "edu.cn", "ac.cn",
    # India
    "co.in", "net.in", "org.in", "firm.in", "gen.in", "ind.in", "ac.in",
    "edu.in", "res.in", "gov.in", "nic.in",
    # New Zealand
    "co.nz", "net.nz", "org.nz", "govt.nz", "ac.nz", "school.nz", "geek.nz",
    # South Africa
    "co.za", "net.za", "org.za", "gov.za", "ac.za", "web.za",
    # Korea
    "co.kr", "ne.kr", "or.kr", "re.kr", "go.kr", "ac.kr", "pe.kr",
    # Mexico / Latin America
    "com.mx", "org.mx", "gob.mx", "net.mx", "edu.mx",
    "com.ar", "net.ar", "org.ar", "gob.ar",
    "com.co", "net.co", "org.co", "edu.co", "gov.co",
    "com.pe", "com.ec", "com.uy", "com.py", "com.bo", "com.ve", "co.ve",
    "com.gt", "com.sv", "com.ni", "co.cr", "com.pa", "com.do",
    # Europe (non-.uk multi-label registries)
    "com.pl", "net.pl", "org.pl", "edu.pl",
    "com.pt", "edu.pt", "org.pt",
    "com.gr", "edu.gr", "net.gr", "org.gr",
    "com.ro", "org.ro", "com.cy", "com.mt", "org.mt",
    "co.at", "or.at", "ac.at", "gv.at",
    "com.ua", "net.ua", "org.ua", "edu.ua", "gov.ua", "in.ua",
    "com.ru", "net.ru", "org.ru", "msk.ru", "spb.ru",
    "com.tr", "net.tr", "org.tr", "gov.tr", "edu.tr", "gen.tr", "web.tr",
    # Israel
    "co.il", "net.il", "org.il", "ac.il", "gov.il", "muni.il",
    # Southeast / South Asia
    "com.sg", "net.sg", "org.sg", "edu.sg", "gov.sg",
    "com.my", "net.my", "org.my", "edu.my", "gov.my",
    "com.hk", "net.hk", "org.hk", "edu.hk", "gov.hk", "idv.hk",
    "com.tw", "net.tw", "org.tw", "edu.tw", "gov.tw", "idv.tw",
    "co.id", "net.id", "or.id", "web.id", "ac.id", "sch.id", "go.id",
    "co.th", "in.th", "ac.th", "go.th", "or.th", "net.th",
    "com.vn", "net.vn", "org.vn", "edu.vn", "gov.vn", "biz.vn",
    "com.ph", "net.ph", "org.ph", "edu.ph", "gov.ph",
    "com.pk", "net.pk", "org.pk", "edu.pk", "gov.pk",
    "com.bd", "net.bd", "org.bd", "edu.bd", "gov.bd",
    "com.np", "org.np", "edu.np", "gov.np",
    "com.lk", "org.lk", "edu.lk", "gov.lk",
    "com.kh", "com.mm", "com.la",
    # Middle East / Africa
    "com.sa", "net.sa", "org.sa", "edu.sa", "gov.sa",
    "com.eg", "net.eg", "org.eg", "edu.eg", "gov.eg",
    "com.ae", "net.ae", "org.ae", "ac.ae", "gov.ae",
    "com.qa", "com.kw", "com.bh", "com.om", "com.jo", "com.lb",
    "com.ng", "net.ng", "org.ng", "edu.ng", "gov.ng",
    "co.ke", "or.ke", "ne.ke", "go.ke", "ac.ke",
    "co.ug", "or.ug", "ac.ug", "go.ug",
    "co.tz", "or.tz", "ac.tz", "go.tz",
    "com.gh", "org.gh", "edu.gh", "gov.gh",
    "com.et", "co.zw", "co.zm", "co.mz", "co.bw", "com.na",
    "co.ma", "net.ma", "org.ma", "ac.ma", "gov.ma",
    "com.tn", "com.dz", "com.ly",
})


def normalize_hostname(raw: str) -> str:
    """Lowercase a hostname and strip scheme, port, path, and trailing dot.

    Returns "" when nothing hostname-like survives (empty input, embedded
    whitespace); callers treat "" as a missing domain.
    """
    value = raw.strip()
    if not value:
        return ""
    if "://" in value:
        value = urlsplit(value).netloc or value.split("://", 1)[1]
    # Strip any path/query fragment left over from sloppy input.
    for sep in ("/", "?", "#"):
        value = value.split(sep, 1)[0]
    if "@" in value:  # userinfo
        value = value.rsplit("@", 1)[1]
    value = value.rsplit(":", 1)[0] if _looks_like_port(value) else value
    value = value.strip().rstrip(".").lower()
    if not value or any(ch.isspace() for ch in value):
        return ""
    return value


def _looks_like_port(value: str) -> bool:
    if ":" not in value:
        return False
    tail = value.rsplit(":", 1)[1]
    return tail.isdigit()


def registrable_domain(host: str) -> str:
    """Reduce a hostname to its registrable domain (`sub.a.co.uk` -> `a.co.uk`).

    Accepts raw or normalized input; returns "" for empty input and the
    host unchanged when it is itself a bare suffix or single label.
    """
    normalized = normalize_hostname(host)
    if not normalized:
        return ""
    labels = normalized.split(".")
    if len(labels) <= 2:
        return normalized
    # Longest-match against the suffix table, falling back to one label.
    for start in range(len(labels) - 1):
        candidate = ".".join(labels[start:])
        if candidate in _MULTI_LABEL_SUFFIXES:
            if start == 0:
                return normalized  # the host *is* a public suffix
            return ".".join(labels[start - 1:])
    return ".".join(labels[-2:])


def same_registrable(a: str, b: str) -> bool:
    return registrable_domain(a) == registrable_domain(b) != ""
