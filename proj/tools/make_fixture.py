#!/usr/bin/env python3
"""Regenerates the TEI fixture corpus under data/fixture/.

Writes 20 letters with seeded alterations, a lemma dictionary, word vectors
and truth.csv (doc_id, span_id, category). Output is deterministic.
"""

import argparse
import random
from pathlib import Path
from xml.sax.saxutils import escape

AUTHORS = ["Anna Berger", "Karl Vogel", "Lena Roth", "Paul Adler"]

# Base sentences per author; each author keeps to one subject.
SENTENCES = {
    "Anna Berger": [
        "Morgen fahren wir mit dem Zug nach Salzburg.",
        "Die Reise durch die Berge war lang und kalt.",
        "Im Hotel am See gibt es ein kleines Zimmer für uns.",
        "Der Bahnhof war voll von Koffern und Reisenden.",
        "Ich sende dir eine Karte aus den Bergen.",
        "Die Fahrt über den Pass dauerte den ganzen Tag.",
        "Am Abend sahen wir die Lichter der Stadt am Ufer.",
        "Der Schaffner brachte uns warmen Tee in den Wagen.",
    ],
    "Karl Vogel": [
        "Die Kinder spielen den ganzen Tag im Garten.",
        "Meine Mutter lässt dich herzlich grüßen.",
        "Zum Geburtstag kam die ganze Familie zusammen.",
        "Der Vater arbeitet wieder in der Werkstatt.",
        "Unsere Tochter lernt jetzt Klavier bei der Nachbarin.",
        "Am Sonntag essen wir alle bei der Großmutter.",
        "Der kleine Bruder hat sich das Bein gebrochen.",
        "Die Hochzeit der Schwester ist im Mai.",
    ],
    "Lena Roth": [
        "Die Rechnung für die Lieferung liegt bei.",
        "Der Preis für das Papier ist wieder gestiegen.",
        "Die Bank verlangt höhere Zinsen für den Kredit.",
        "Wir müssen die Miete für das Büro bezahlen.",
        "Der Verlag schuldet uns noch das Honorar.",
        "Die Firma hat im Winter viel Geld verloren.",
        "Der Vertrag mit dem Händler endet im Herbst.",
        "Die Steuer muss bis Ende des Monats bezahlt werden.",
    ],
    "Paul Adler": [
        "Ich lese gerade einen langen Roman über den Krieg.",
        "Das neue Gedicht habe ich dem Verleger geschickt.",
        "Die Bibliothek hat die alten Bücher verkauft.",
        "Der Dichter las im Saal aus seinem Werk.",
        "Die Zeitschrift druckt meine Erzählung im Frühjahr.",
        "Ich schreibe jeden Morgen an dem neuen Stück.",
        "Die Kritik in der Zeitung war sehr hart.",
        "Das Manuskript liegt noch beim Setzer.",
    ],
}

# Substitutions: (before, after, frame). The frame's {} takes the span.
SPELLING = [
    ("wuürde", "würde", "Ich {} gern kommen."),
    ("Brif", "Brief", "Dein {} kam gestern an."),
    ("Freundt", "Freund", "Mein {} ist wieder in der Stadt."),
    ("Reisse", "Reise", "Die {} war gut."),
    ("Mutetr", "Mutter", "Die {} ist krank."),
    ("Vatter", "Vater", "Der {} schreibt selten."),
    ("heutte", "heute", "Ich bleibe {} zu Hause."),
    ("morgn", "morgen", "Wir sehen uns {} früh."),
    ("Sommmer", "Sommer", "Im {} ist es hier still."),
    ("Wintr", "Winter", "Der {} war lang."),
]

GRAMMAR = [
    (["ging"], ["gehe"], "Ich {} oft in die Stadt."),
    (["des", "Hauses"], ["dem", "Hause"], "Vor {} steht ein Baum."),
    (["kam"], ["kommt"], "Er {} am Abend."),
    (["schrieb"], ["schreibe"], "Ich {} dir bald wieder."),
    (["war"], ["ist"], "Das Wetter {} schlecht."),
    (["Briefe"], ["Brief"], "Der {} liegt auf dem Tisch."),
    ([], [","], "Ich hoffe{} dass es dir gut geht."),
    ([","], [], "Wir warten{} bis du kommst."),
    (["Kinder"], ["Kind"], "Das {} schläft schon."),
    (["sagte"], ["sage"], "Ich {} es dir ehrlich."),
]

STYLISTIC = [
    (["schnell"], ["rasch"], "Antworte mir {}."),
    (["bald"], ["demnächst"], "Ich komme {} zu dir."),
    (["schön"], ["hübsch"], "Das Kleid ist {}."),
    (["beginnen"], ["anfangen"], "Wir wollen morgen {}."),
    (["Daher", "bedarf", "es"], ["Es", "bedarf", "daher"], "{} keiner weiteren Worte."),
    (["sehr", "froh"], ["überaus", "froh"], "Ich bin {} über die Nachricht."),
    (["Gespräch"], ["Unterredung"], "Das {} dauerte lange."),
    (["gewiss"], ["sicherlich"], "Das ist {} richtig."),
]

# Content alterations per author: deletions, additions and substitutions.
CONTENT = {
    "Anna Berger": [
        (["und", "der", "Koffer", "ist", "verloren"], [], "Wir sind angekommen {}."),
        ([], ["wir", "bleiben", "eine", "Woche", "in", "Innsbruck"], "Das Wetter ist gut und {}."),
        (["Salzburg"], ["Venedig"], "Die Reise geht nach {}."),
        (["mit", "dem", "Schiff"], ["mit", "der", "Kutsche"], "Wir fahren {} weiter."),
    ],
    "Karl Vogel": [
        (["und", "die", "Großmutter", "ist", "gestorben"], [], "Es ist viel geschehen {}."),
        ([], ["die", "Schwester", "erwartet", "ein", "Kind"], "Ich muss dir sagen {}."),
        (["Tochter"], ["Nichte"], "Die {} besucht uns."),
        (["im", "Garten"], ["auf", "dem", "Dachboden"], "Die Kinder spielen {}."),
    ],
    "Lena Roth": [
        (["und", "das", "Geld", "ist", "fort"], [], "Die Firma ist in Not {}."),
        ([], ["der", "Kredit", "wurde", "gekündigt"], "Die Bank schreibt {}."),
        (["Gewinn"], ["Verlust"], "Im Herbst gab es {}."),
        (["zweihundert", "Mark"], ["tausend", "Kronen"], "Die Rechnung beträgt {}."),
    ],
    "Paul Adler": [
        (["und", "der", "Verleger", "hat", "abgelehnt"], [], "Das Buch ist fertig {}."),
        ([], ["die", "Zensur", "hat", "das", "Stück", "verboten"], "Ich habe erfahren {}."),
        (["Roman"], ["Gedichtband"], "Der {} erscheint im Herbst."),
        (["im", "Saal"], ["vor", "Studenten"], "Ich lese {} vor."),
    ],
}

# Extra inflected forms and lemmas the grammar and spelling rules rely on.
LEMMAS = {
    "ging": "gehen", "gehe": "gehen", "gehen": "gehen",
    "des": "der", "dem": "der", "der": "der", "die": "der", "das": "der", "den": "der",
    "Hauses": "Haus", "Hause": "Haus", "Haus": "Haus",
    "kam": "kommen", "kommt": "kommen", "kommen": "kommen", "komme": "kommen", "kommst": "kommen",
    "schrieb": "schreiben", "schreibe": "schreiben", "schreibt": "schreiben",
    "war": "sein", "ist": "sein", "sind": "sein", "bin": "sein",
    "Briefe": "Brief", "Brief": "Brief",
    "Kinder": "Kind", "Kind": "Kind",
    "sagte": "sagen", "sage": "sagen", "sagen": "sagen",
    "würde": "werden", "wurde": "werden",
}

NOT_IN_DICTIONARY = {"Daher", "Es"}

SYNONYMS = [
    ["schnell", "rasch"],
    ["bald", "demnächst"],
    ["schön", "hübsch"],
    ["beginnen", "anfangen"],
    ["sehr", "überaus"],
    ["gespräch", "unterredung"],
    ["gewiss", "sicherlich"],
]

ROMAN = ["I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"]


def split_words(text):
    out, word = [], ""
    for ch in text:
        if ch.isalnum():
            word += ch
        else:
            if word:
                out.append(word)
            word = ""
    if word:
        out.append(word)
    return out


def alteration_xml(before, after, hand="#h_author"):
    parts = []
    if before:
        parts.append(f'<del hand="{hand}">{escape(" ".join(before))}</del>')
    if after:
        parts.append(f'<add hand="{hand}">{escape(" ".join(after))}</add>')
    return "".join(parts)


def paratext_xml(rng, index):
    kind = index % 4
    n = rng.randint(1, 40)
    if kind == 0:
        return f'<add hand="#h_archive" place="margin">{n}</add>'
    if kind == 1:
        return f'<note type="foliation" hand="#h_archive">Bl. {n}</note>'
    if kind == 2:
        return f'<add hand="#h_archive" place="top">{rng.randint(1, 28)}.{rng.randint(1, 12)}.{rng.randint(1919, 1925)}</add>'
    return f'<note type="numbering" hand="#h_archive">{ROMAN[n % len(ROMAN)]}</note>'


def fill(frame, piece):
    head, tail = frame.split("{}")
    return escape(head) + piece + escape(tail)


def build_letter(index, rng):
    author = AUTHORS[index % len(AUTHORS)]
    addressee = AUTHORS[(index + 1 + index // len(AUTHORS)) % len(AUTHORS)]
    if addressee == author:
        addressee = AUTHORS[(index + 2) % len(AUTHORS)]
    doc_id = f"letter{index + 1:02d}"
    date = f"19{20 + index % 5}-{1 + index % 12:02d}-{1 + (index * 7) % 28:02d}"

    sentences = [escape(s) for s in rng.sample(SENTENCES[author], 5)]
    spans = [
        ("Paratext", paratext_xml(rng, index)),
        ("Spelling", fill(SPELLING[index % len(SPELLING)][2],
                          alteration_xml([SPELLING[index % len(SPELLING)][0]],
                                         [SPELLING[index % len(SPELLING)][1]]))),
        ("Grammar", fill(GRAMMAR[index % len(GRAMMAR)][2],
                         alteration_xml(*GRAMMAR[index % len(GRAMMAR)][:2]))),
        ("Stylistic", fill(STYLISTIC[index % len(STYLISTIC)][2],
                           alteration_xml(*STYLISTIC[index % len(STYLISTIC)][:2]))),
    ]
    for j in rng.sample(range(len(CONTENT[author])), 2):
        before, after, frame = CONTENT[author][j]
        spans.append(("ContentRelated", fill(frame, alteration_xml(before, after))))

    # The paratext marker opens the letter; the rest are spread over the text.
    pieces = [spans[0]] + [(None, s) for s in sentences]
    for item in spans[1:]:
        pieces.insert(rng.randint(1, len(pieces)), item)

    truth, body, span_id = [], [], 0
    for category, xml in pieces:
        if category is not None:
            truth.append((doc_id, span_id, category))
            span_id += 1
        body.append(xml)

    tei = f"""<?xml version="1.0" encoding="UTF-8"?>
<TEI xmlns="http://www.tei-c.org/ns/1.0" xml:id="{doc_id}">
  <teiHeader>
    <fileDesc>
      <titleStmt><title>Brief {index + 1}</title></titleStmt>
      <publicationStmt><p>Synthetic test letter</p></publicationStmt>
      <sourceDesc><p>Generated</p></sourceDesc>
    </fileDesc>
    <profileDesc>
      <handNotes>
        <handNote xml:id="h_author" scribe="author" medium="ink"/>
        <handNote xml:id="h_archive" scribe="archivist" medium="pencil"/>
      </handNotes>
      <correspDesc>
        <correspAction type="sent"><persName>{author}</persName><date when="{date}"/></correspAction>
        <correspAction type="received"><persName>{addressee}</persName></correspAction>
      </correspDesc>
    </profileDesc>
  </teiHeader>
  <text>
    <body>
      <p>{body[0]}</p>
      <p>{" ".join(body[1:])}</p>
    </body>
  </text>
</TEI>
"""
    return doc_id, tei, truth


def all_words():
    words = set()
    for group in SENTENCES.values():
        for s in group:
            words.update(split_words(s))
    for table in (SPELLING,):
        for before, after, frame in table:
            words.add(after)
            words.update(split_words(frame))
    for table in [GRAMMAR, STYLISTIC] + list(CONTENT.values()):
        for before, after, frame in table:
            words.update(before)
            words.update(w for w in after if w.isalnum())
            words.update(split_words(frame))
    return words


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "fixture"))
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()
    out = Path(args.out)
    (out / "tei").mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)

    truth = []
    for i in range(20):
        doc_id, tei, rows = build_letter(i, rng)
        (out / "tei" / f"{doc_id}.xml").write_text(tei, encoding="utf-8")
        truth.extend(rows)
    with open(out / "truth.csv", "w", encoding="utf-8") as f:
        f.write("doc_id,span_id,category\n")
        for doc_id, span_id, category in truth:
            f.write(f"{doc_id},{span_id},{category}\n")

    words = all_words()
    misspelled = {before for before, _, _ in SPELLING}
    with open(out / "lemmas.tsv", "w", encoding="utf-8") as f:
        f.write("# surface\tlemma\n")
        for w in sorted(words | set(LEMMAS)):
            if w in NOT_IN_DICTIONARY or w in misspelled:
                continue
            f.write(f"{w}\t{LEMMAS.get(w, w)}\n")

    dims = 16
    vec_rng = random.Random(args.seed + 1)
    folded = sorted({w.lower() for w in words})
    base = {}
    for group in SYNONYMS:
        centre = [vec_rng.gauss(0, 1) for _ in range(dims)]
        for w in group:
            base[w] = [c + vec_rng.gauss(0, 0.1) for c in centre]
    with open(out / "vectors.vec", "w", encoding="utf-8") as f:
        f.write(f"{len(folded)} {dims}\n")
        for w in folded:
            vec = base.get(w) or [vec_rng.gauss(0, 1) for _ in range(dims)]
            f.write(w + " " + " ".join(f"{x:.5f}" for x in vec) + "\n")


if __name__ == "__main__":
    main()
