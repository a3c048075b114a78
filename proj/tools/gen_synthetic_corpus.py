#!/usr/bin/env python3
# Copyright 2026 The CiteScope Authors.
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
"""Regenerates the bundled synthetic corpora under data/.

data/corpus  three planted topics. Each reference article interleaves ten
             "key" sentences (two per discourse facet) with clusters of
             unrelated filler prose. Every citation paraphrases one key
             sentence and gold summaries are built from key sentences, so
             citation contexts contain the gold content while the filler
             dominates whole-document statistics.
data/facets  a linearly separable facet corpus: every facet has its own cue
             vocabulary, shared topical words carry no facet signal.

Output is deterministic; rerun with `python3 tools/gen_synthetic_corpus.py`.
"""

import json
import os
import random

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

FACETS = ["hypothesis", "method", "results", "implication", "discussion"]

# Two templates per facet; slots a..e take topic noun phrases.
KEY_TEMPLATES = {
    "hypothesis": [
        "We hypothesize that {a} regulates {b} through {c}, and we propose "
        "that loss of {d} in {e} is sufficient to drive this process.",
        "Our central premise is that {a} acts upstream of {b}; we postulate "
        "that {c} couples {d} to {e} during early stages.",
    ],
    "method": [
        "Using quantitative assays and expression profiling, we measured {a} "
        "and {b} in {c} isolated from {d} and {e} under controlled conditions.",
        "The protocol combined lentiviral knockdown of {a} with imaging of "
        "{b}, and we quantified {c} in {d} and {e} across replicates.",
    ],
    "results": [
        "Our results show that {a} strongly increased {b}, while {c} remained "
        "unchanged in {d} compared with {e}.",
        "We observed a twofold reduction of {a} after depletion of {b}, and "
        "{c} correlated significantly with {d} but not with {e}.",
    ],
    "implication": [
        "These findings imply that targeting {a} could restore {b}, "
        "suggesting therapeutic potential for {c} in patients with {d} and {e}.",
        "Consequently, {a} may serve as a biomarker of {b}, with implications "
        "for treating {c} and for monitoring {d} in {e}.",
    ],
    "discussion": [
        "We discuss how {a} may interact with {b}, and we argue that earlier "
        "reports on {c} underestimated the role of {d} in {e}.",
        "In contrast to previous studies, our interpretation places {a} "
        "downstream of {b}, although {c} and {d} could confound {e}.",
    ],
}

CITATION_TEMPLATES = {
    "hypothesis": "It has been hypothesized that {a} regulates {b} via {c}, "
                  "with {d} loss in {e} driving the process",
    "method": "{a} and {b} were measured in {c} from {d} and {e} using "
              "quantitative assays",
    "results": "{a} was shown to increase {b}, whereas {c} was unchanged in "
               "{d} relative to {e}",
    "implication": "targeting {a} could restore {b}, implying therapeutic "
                   "value of {c} for {d} and {e}",
    "discussion": "the role of {d} in {e} may have been underestimated, "
                  "since {a} interacts with {b} and {c}",
}

TOPICS = [
    {
        "id": "T01",
        "title": "Oncogenic ras provokes premature cell senescence",
        "terms": [
            "oncogenic ras", "p53", "p16", "premature senescence",
            "mouse embryonic fibroblasts", "cell cycle arrest", "pRb pathway",
            "MAPK signaling", "human fibroblasts", "E6 and E7 proteins",
            "DNA tumor virus oncoproteins", "H-ras V12", "proliferation arrest",
            "p53−/− cells", "transformation", "BrdU incorporation",
            "senescence markers", "IMR90 cells", "REF52 cells", "p21 induction",
            "tumor suppressors", "SV40 large T antigen", "growth arrest",
            "oncogene activation", "cyclin dependent kinases",
        ],
        "authors": ["Serrano", "Lin", "Palmero", "Zhu", "Ferbeyre", "Lowe",
                    "Hahn", "Weinberg", "Bartek", "Collado"],
    },
    {
        "id": "T02",
        "title": "Wnt/β-catenin signaling sustains intestinal stem cells",
        "terms": [
            "β-catenin", "Wnt ligands", "Lgr5 stem cells", "crypt base",
            "Paneth cells", "Tcf4 activity", "intestinal organoids",
            "APC mutations", "epithelial renewal", "Notch signaling",
            "R-spondin", "crypt fission", "villus differentiation",
            "Axin2 expression", "stem cell niche", "colorectal adenomas",
            "goblet cells", "EphB receptors", "transit amplifying cells",
            "Frizzled receptors", "lineage tracing", "Ascl2 targets",
            "secretory progenitors", "mucosal repair", "Bmp antagonists",
        ],
        "authors": ["Barker", "Clevers", "Sato", "Korinek", "Pinto",
                    "van de Wetering", "Batlle", "Farin", "Snippert",
                    "Schuijers"],
    },
    {
        "id": "T03",
        "title": "Adipose tissue inflammation links obesity to insulin "
                 "resistance",
        "terms": [
            "adipose macrophages", "insulin resistance", "TNF-alpha",
            "JNK activation", "visceral fat", "free fatty acids",
            "IKK beta", "glucose uptake", "hepatic steatosis",
            "M1 polarization", "adipokine secretion", "leptin levels",
            "IRS-1 phosphorylation", "hyperinsulinemia", "lipolysis",
            "crown-like structures", "PPAR gamma agonists", "GLUT4 trafficking",
            "ER stress", "adiponectin", "high fat diet", "chemokine CCL2",
            "beta cell failure", "ceramide accumulation", "TLR4 signaling",
        ],
        "authors": ["Hotamisligil", "Weisberg", "Xu", "Olefsky", "Lumeng",
                    "Saltiel", "Shoelson", "Kahn", "Spiegelman", "Osborn"],
    },
]

# Filler prose: clusters of mutually similar sentences with vocabulary that
# never appears in key sentences, citations or gold summaries.
FILLER_CLUSTERS = [
    ["All specimens were stored in the central freezer archive and logged "
     "by the facility staff according to institutional storage rules.",
     "The freezer archive staff logged every specimen transfer, and the "
     "storage rules of the institution were audited each quarter.",
     "Specimen logging in the freezer archive followed the institutional "
     "rules, and facility staff audited storage records regularly.",
     "Storage records from the freezer archive were reconciled by facility "
     "staff to confirm that institutional logging rules were followed."],
    ["Funding for the consortium was provided by several national agencies, "
     "and the steering committee approved the annual budget.",
     "The steering committee of the consortium reviewed the annual budget "
     "and allocated agency funding among the participating sites.",
     "Agency funding decisions were ratified by the consortium steering "
     "committee during the annual budget meeting.",
     "Budget reports were circulated to the steering committee, and the "
     "national agencies renewed consortium funding annually."],
    ["Statistical software licenses were renewed by the department, and "
     "the spreadsheet templates were shared on the departmental server.",
     "The departmental server hosted spreadsheet templates, while software "
     "licenses were renewed through the department office.",
     "Spreadsheet templates on the server were versioned by the department, "
     "and license renewals for the software were tracked centrally.",
     "Departmental office staff renewed software licenses and backed up the "
     "spreadsheet templates stored on the server."],
    ["Ethics board approval was obtained before recruitment, and written "
     "consent forms were archived with the board paperwork.",
     "The ethics board reviewed consent forms and recruitment paperwork, "
     "granting approval prior to enrollment.",
     "Written consent paperwork was archived after the ethics board granted "
     "approval for recruitment and enrollment.",
     "Recruitment began only after ethics board approval, with signed "
     "consent forms archived alongside board paperwork."],
    ["Laboratory benches were cleaned with ethanol each evening, and the "
     "fume hoods were certified by the safety office.",
     "The safety office certified fume hoods annually and inspected bench "
     "cleaning routines with ethanol wipes.",
     "Bench surfaces and fume hoods were inspected by the safety office, "
     "which verified the evening ethanol cleaning routine.",
     "Ethanol cleaning of benches and certification of fume hoods were "
     "documented by the safety office inspectors."],
    ["Manuscript drafts were circulated among coauthors by email, and "
     "editorial comments were merged by the corresponding author.",
     "The corresponding author merged editorial comments from coauthors and "
     "circulated revised manuscript drafts by email.",
     "Coauthors returned editorial comments on each manuscript draft, which "
     "the corresponding author merged before resubmission.",
     "Revised drafts of the manuscript were emailed to coauthors after the "
     "corresponding author merged their editorial comments."],
    ["Shipping of reagents was delayed by customs inspections, so courier "
     "invoices were reimbursed through the purchasing office.",
     "The purchasing office reimbursed courier invoices after customs "
     "inspections delayed reagent shipping.",
     "Customs inspections and courier delays complicated reagent shipping, "
     "and the purchasing office processed the invoices.",
     "Courier invoices for delayed reagent shipments were settled by the "
     "purchasing office once customs inspections cleared."],
    ["Parking permits for visiting collaborators were arranged by the "
     "administrative assistant, who also booked meeting rooms.",
     "Meeting rooms and parking permits for visiting collaborators were "
     "booked through the administrative assistant.",
     "The administrative assistant coordinated visitor parking permits and "
     "meeting room bookings for collaborators.",
     "Visiting collaborators received parking permits and meeting room "
     "reservations from the administrative assistant."],
]

CITING_FILLER = [
    "Understanding this mechanism remains an open problem in the field.",
    "To address this question, we have been investigating related models.",
    "Several groups have contributed to this line of work.",
    "Here we extend these observations to a new experimental system.",
    "The broader context of these studies is summarized below.",
]

FACET_CUES = {
    "hypothesis": ["hypothesize", "hypothesis", "propose", "postulate",
                   "premise", "conjecture", "speculate", "posit",
                   "presume", "theorize", "assume", "predict"],
    "method": ["assay", "protocol", "measured", "quantified", "profiling",
               "knockdown", "imaging", "isolated", "staining", "sequencing",
               "cultured", "transfected"],
    "results": ["results", "observed", "increased", "decreased", "unchanged",
                "significantly", "reduction", "correlated", "elevated",
                "detected", "twofold", "higher"],
    "implication": ["imply", "implications", "therapeutic", "targeting",
                    "potential", "biomarker", "treating", "clinical",
                    "consequently", "translational", "prevention", "drug"],
    "discussion": ["discuss", "argue", "contrast", "interpretation",
                   "underestimated", "previous", "debate", "reconcile",
                   "controversy", "limitations", "alternatively", "caveat"],
    "data_set_used": ["dataset", "cohort", "database", "repository",
                      "registry", "corpus", "atlas", "biobank",
                      "consortium", "archive", "catalogue", "compendium"],
}

NEUTRAL_TERMS = [
    "protein", "cells", "expression", "signaling", "tissue", "mice",
    "pathway", "gene", "receptor", "activity", "response", "levels",
    "regulation", "function", "model", "samples", "patients", "tumor",
    "growth", "development", "stress", "metabolism", "immune", "kinase",
    "transcription", "mutation", "binding", "complex", "membrane", "factor",
]

CONNECTIVES = ["the", "of", "and", "in", "with", "for", "that", "this", "on"]


def key_sentences(topic, rng):
    """Ten (facet, sentence) pairs, two per facet, each with fresh terms."""
    terms = list(topic["terms"])
    rng.shuffle(terms)
    out = []
    cursor = 0
    for facet in FACETS:
        for template in KEY_TEMPLATES[facet]:
            slots = terms[cursor:cursor + 5]
            cursor = (cursor + 5) % len(terms)
            text = template.format(a=slots[0], b=slots[1], c=slots[2],
                                   d=slots[3], e=slots[4])
            out.append((facet, text[0].upper() + text[1:], slots))
    return out


def build_topic(topic, rng):
    keys = key_sentences(topic, rng)
    fillers = [s for cluster in FILLER_CLUSTERS for s in cluster]
    rng.shuffle(fillers)
    # Interleave: each key sentence followed by two or three filler lines.
    body = []
    filler_iter = iter(fillers)
    for i, (_, text, _) in enumerate(keys):
        body.append(text)
        for _ in range(2 if i % 2 else 3):
            body.append(next(filler_iter))
    body.extend(filler_iter)
    reference_text = " ".join(body)

    citing_articles = []
    citations = []
    n_citing = 7
    for c in range(n_citing):
        citing_articles.append({"id": f"{topic['id']}-C{c + 1}",
                                "title": f"Citing study {c + 1} of "
                                         f"{topic['title'].lower()}",
                                "parts": []})
    for k, (facet, _, slots) in enumerate(keys):
        author = topic["authors"][k % len(topic["authors"])]
        year = 1996 + (k * 3) % 17
        marker = f"({author} et al., {year})"
        body_text = CITATION_TEMPLATES[facet].format(
            a=slots[0], b=slots[1], c=slots[2], d=slots[3], e=slots[4])
        text = body_text[0].upper() + body_text[1:] + " " + marker + "."
        owner = citing_articles[k % n_citing]
        owner["parts"].append(("citation", text, facet, marker,
                               f"{topic['id']}-X{k + 1}"))

    for article in citing_articles:
        pieces = []
        offsets = []
        filler_pick = rng.sample(CITING_FILLER, 3)
        pieces.append(filler_pick[0])
        for j, (_, text, facet, marker, cid) in enumerate(article["parts"]):
            pieces.append(text)
            offsets.append((len(pieces) - 1, text, facet, marker, cid))
            pieces.append(filler_pick[1 + j % 2])
        full = ""
        starts = []
        for p in pieces:
            if full:
                full += " "
            starts.append(len(full))
            full += p
        for index, text, facet, marker, cid in offsets:
            start = starts[index]
            citations.append({
                "id": cid,
                "citing_article_id": article["id"],
                "text": text,
                "char_start": start,
                "char_end": start + len(text),
                "marker": marker,
                "facet": facet,
            })
        article["text"] = full
        del article["parts"]
    citations.sort(key=lambda c: int(c["id"].split("X")[1]))

    golds = []
    for a in range(4):
        chosen = list(range(len(keys)))
        drop = rng.sample(chosen, 1 + a % 2)
        chosen = [i for i in chosen if i not in drop]
        if a % 2:
            chosen.sort(key=lambda i: (FACETS.index(keys[i][0]), -i))
        words = []
        for i in chosen:
            sentence = keys[i][1].split()
            if len(words) + len(sentence) > 250:
                break
            words.extend(sentence)
        golds.append({"annotator_id": f"A{a + 1}", "text": " ".join(words)})

    return {
        "id": topic["id"],
        "reference_article": {"id": f"{topic['id']}-R",
                              "title": topic["title"],
                              "text": reference_text},
        "citing_articles": citing_articles,
        "citations": citations,
        "gold_summaries": golds,
    }


def facet_sentence(facet, rng):
    cues = rng.sample(FACET_CUES[facet], 3)
    neutral = rng.sample(NEUTRAL_TERMS, 4)
    words = []
    for i in range(4):
        words.append(neutral[i])
        if i < 3:
            words.append(cues[i])
        words.append(rng.choice(CONNECTIVES))
    text = " ".join(words)
    return text[0].upper() + text[1:]


def build_facet_topic(index, rng, per_facet):
    topic_id = f"F{index + 1:02d}"
    facets = list(FACET_CUES)
    ref_sentences = []
    for facet in facets:
        for _ in range(4):
            ref_sentences.append(facet_sentence(facet, rng) + ".")
    rng.shuffle(ref_sentences)

    citing = []
    citations = []
    items = [(f, n) for f in facets for n in range(per_facet)]
    rng.shuffle(items)
    per_article = 5
    for a in range(0, len(items), per_article):
        article_id = f"{topic_id}-C{a // per_article + 1}"
        text = ""
        for facet, _ in items[a:a + per_article]:
            author = rng.choice(["Smith", "Chen", "Garcia", "Okafor", "Ivanova",
                                 "Tanaka", "Müller", "Rossi"])
            marker = f"({author} et al., {rng.randint(1995, 2013)})"
            sentence = facet_sentence(facet, rng) + " " + marker + "."
            if text:
                text += " "
            start = len(text)
            text += sentence
            citations.append({
                "id": f"{topic_id}-X{len(citations) + 1}",
                "citing_article_id": article_id,
                "text": sentence,
                "char_start": start,
                "char_end": start + len(sentence),
                "marker": marker,
                "facet": facet,
            })
        citing.append({"id": article_id, "title": f"Facet source {article_id}",
                       "text": text})
    return {
        "id": topic_id,
        "reference_article": {"id": f"{topic_id}-R",
                              "title": f"Facet reference {topic_id}",
                              "text": " ".join(ref_sentences)},
        "citing_articles": citing,
        "citations": citations,
        "gold_summaries": [],
    }


def write_corpus(directory, topics):
    os.makedirs(directory, exist_ok=True)
    names = []
    for topic in topics:
        name = topic["id"] + ".json"
        with open(os.path.join(directory, name), "w", encoding="utf-8") as f:
            json.dump(topic, f, ensure_ascii=False, indent=2)
            f.write("\n")
        names.append(name)
    with open(os.path.join(directory, "manifest.json"), "w",
              encoding="utf-8") as f:
        json.dump({"topics": names}, f, indent=2)
        f.write("\n")


def main():
    rng = random.Random(20140101)
    write_corpus(os.path.join(ROOT, "corpus"),
                 [build_topic(t, rng) for t in TOPICS])
    rng = random.Random(788)
    write_corpus(os.path.join(ROOT, "facets"),
                 [build_facet_topic(i, rng, per_facet=10) for i in range(4)])


if __name__ == "__main__":
    main()
