#!/usr/bin/env python3
"""Regenerate the desk-scale demo dataset under tests/fixtures/.

The dataset covers the whole toolkit: a 29-question source corpus with
copied / paraphrased / authentic responses for the robustness harness, a
worker roster, dual-evaluator ratings, expert Likert records, collected
responses for duplicate screening, and a ready-to-serve study config.

Everything is deterministic; run it after editing the inline content and
it will re-verify the dataset's structural guarantees:
  * every copied item is flagged by the screen (shares shingles with its
    retrieved source),
  * every authentic item is trigram-disjoint from the entire corpus and
    passes the screen,
  * every fixture text clears the lexicon validity gate.
"""
from __future__ import annotations

import json
import math
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from crowdqc.pipeline import CandidateResponse, QCConfig, validate  # noqa: E402
from crowdqc.search import CorpusDocument, OfflineSearchBackend, build_index  # noqa: E402
from crowdqc.textkit import Lexicon, lexical_validity, ngrams, normalize  # noqa: E402

FIXTURES = REPO / "tests" / "fixtures"

# --------------------------------------------------------------------------
# The 29 questions: source document (what a search retrieves), a verbatim
# copy, a paraphrase, and an authentic first-person answer.
#
# Register rules keep the three response kinds distinguishable:
#   - sources are clinical third-person prose; never first person;
#   - authentic answers are first-person anecdotes and must not share any
#     three-word run with any source document;
#   - paraphrases marked keep_run=True retain a short verbatim run and
#     should be caught; the rest are full rewords and typically are not.
# --------------------------------------------------------------------------

ITEMS = [
    # ----- A1: social-emotional reciprocity -----
    dict(
        qid="q-a1-1",
        criterion="A1",
        question="Describe an interaction where this person used sounds you would not expect in a typical conversation.",
        source=(
            "Children with social communication differences may produce unexpected "
            "vocalizations during conversation, such as humming, squealing, or "
            "groaning at moments that do not call for them. These sounds can appear "
            "when the topic is neutral and nothing in the exchange would normally "
            "provoke annoyance or excitement."
        ),
        copied=(
            "Children with social communication differences may produce unexpected "
            "vocalizations during conversation, such as humming, squealing, or "
            "groaning at moments that do not call for them."
        ),
        paraphrased=(
            "Kids who communicate differently sometimes emit odd noises "
            "mid-dialogue, like hums or squeals, precisely when the chat contains "
            "no obvious trigger for excitement or irritation."
        ),
        keep_run=False,
        authentic=(
            "My nephew makes a low buzzing noise whenever we chat about his day. "
            "It pops out even when nobody said anything upsetting, and he seems "
            "surprised that we noticed it at all."
        ),
    ),
    dict(
        qid="q-a1-2",
        criterion="A1",
        question="Describe a time when this person struggled with back-and-forth conversation.",
        source=(
            "A reduced capacity for reciprocal dialogue is a core feature: the "
            "individual may answer a direct question and then fall silent, failing "
            "to return the question or volunteer related remarks. Conversation "
            "partners often report carrying the entire exchange themselves."
        ),
        copied=(
            "The individual may answer a direct question and then fall silent, "
            "failing to return the question or volunteer related remarks."
        ),
        paraphrased=(
            "Such a person often replies to what was asked, then goes quiet, "
            "never tossing the query back or adding fresh remarks unprompted."
        ),
        keep_run=False,
        authentic=(
            "If i ask my son about school he gives me one word and walks off. "
            "Getting a whole chat going feels like pulling teeth, so mostly i just "
            "narrate and he listens."
        ),
    ),
    dict(
        qid="q-a1-3",
        criterion="A1",
        question="Describe how this person shares their interests or achievements with others.",
        source=(
            "Diminished sharing of interests is frequently observed. The child "
            "rarely brings objects to show caregivers, seldom points out events of "
            "interest, and may complete an achievement without seeking any audience "
            "or acknowledgement from those nearby."
        ),
        copied=(
            "The child rarely brings objects to show caregivers, seldom points out "
            "events of interest, and may complete an achievement without seeking "
            "any audience or acknowledgement from those nearby."
        ),
        paraphrased=(
            "Such children hardly ever carry items over to display to adults, "
            "almost never indicate happenings around them, and finish "
            "accomplishments without wanting applause."
        ),
        keep_run=False,
        authentic=(
            "When my daughter finishes a puzzle she never calls us over. She just "
            "starts the next one. We found out about her spelling award because the "
            "teacher emailed us, not because she mentioned it."
        ),
    ),
    dict(
        qid="q-a1-4",
        criterion="A1",
        question="Describe how this person responds when someone greets them.",
        source=(
            "Responses to social greetings are often absent or atypical. When "
            "greeted by name, the person may continue an ongoing activity without "
            "looking up, or may echo the greeting verbatim rather than producing a "
            "reciprocal salutation of their own."
        ),
        copied=(
            "When greeted by name, the person may continue an ongoing activity "
            "without looking up, or may echo the greeting verbatim rather than "
            "producing a reciprocal salutation of their own."
        ),
        paraphrased=(
            "On hearing a hello aimed at them, these individuals tend to keep doing "
            "whatever occupied them, eyes down, or they repeat the salutation back "
            "word for word instead of offering a fresh one."
        ),
        keep_run=False,
        authentic=(
            "Neighbors wave at our boy every morning and he sails right past them "
            "on his scooter. If grandma says hi sweetheart, we sometimes get hi "
            "sweetheart right back in her exact tone."
        ),
    ),
    dict(
        qid="q-a1-5",
        criterion="A1",
        question="Describe what happens when you call this person's name.",
        source=(
            "Orienting to one's own name is commonly reduced. Caregivers describe "
            "calling several times with increasing volume while the child remains "
            "absorbed in play, even though hearing evaluations return entirely "
            "normal results."
        ),
        copied=(
            "Caregivers describe calling several times with increasing volume while "
            "the child remains absorbed in play, even though hearing evaluations "
            "return entirely normal results."
        ),
        paraphrased=(
            "Parents recount shouting the name louder and louder as the kid stays "
            "buried in a game, despite audiology tests coming back perfectly fine."
        ),
        keep_run=False,
        authentic=(
            "We can say his name five times from across the kitchen and nothing. Tap "
            "his shoulder and he jumps like we appeared from nowhere. His ears are "
            "fine, the doctor checked twice."
        ),
    ),
    # ----- A2: nonverbal communication -----
    dict(
        qid="q-a2-1",
        criterion="A2",
        question="Describe this person's use of eye contact during interactions.",
        source=(
            "Abnormalities in eye contact are characteristic. Gaze may be fleeting, "
            "directed at the speaker's mouth or past the shoulder, or avoided "
            "altogether, and it is poorly integrated with speech and gesture during "
            "social approaches."
        ),
        copied=(
            "Gaze may be fleeting, directed at the speaker's mouth or past the "
            "shoulder, or avoided altogether, and it is poorly integrated with "
            "speech and gesture during social approaches."
        ),
        paraphrased=(
            "Their gaze drifts off quickly, often directed at the speaker's mouth "
            "or somewhere beyond the shoulder, and it rarely lines up with the "
            "words being spoken."
        ),
        keep_run=True,
        keep_run_text="directed at the speaker's mouth",
        authentic=(
            "Talking with my cousin means staring at the top of his head while he "
            "studies the carpet. At dinner he watches everyone's hands instead of "
            "faces. Looking straight at you seems to cost him real effort."
        ),
    ),
    dict(
        qid="q-a2-2",
        criterion="A2",
        question="Describe how this person uses gestures such as pointing or waving.",
        source=(
            "Use of descriptive and instrumental gestures is frequently limited. "
            "The individual may not point to request or comment, may fail to nod or "
            "shake the head in agreement or refusal, and tends not to compensate "
            "for sparse speech with pantomime."
        ),
        copied=(
            "The individual may not point to request or comment, may fail to nod or "
            "shake the head in agreement or refusal, and tends not to compensate "
            "for sparse speech with pantomime."
        ),
        paraphrased=(
            "These people rarely aim a finger at things they want or notice, skip "
            "the usual nodding and head shaking, and never fill speech gaps with "
            "acted-out motions."
        ),
        keep_run=False,
        authentic=(
            "My granddaughter pulls me by the wrist to the fridge instead of "
            "pointing at juice. Yes and no come out as words only, her head stays "
            "still. Waving bye took us two years to teach."
        ),
    ),
    dict(
        qid="q-a2-3",
        criterion="A2",
        question="Describe this person's facial expressions during emotional moments.",
        source=(
            "Facial affect can be flat or poorly matched to context. Observers note "
            "a neutral expression during exciting events, smiles that appear "
            "unrelated to the situation, and limited coordination of expression "
            "with tone of voice."
        ),
        copied=(
            "Observers note a neutral expression during exciting events, smiles "
            "that appear unrelated to the situation, and limited coordination of "
            "expression with tone of voice."
        ),
        paraphrased=(
            "Those nearby describe a neutral expression during exciting events, "
            "grins detached from whatever is happening, and a voice that never "
            "matches the face."
        ),
        keep_run=True,
        keep_run_text="a neutral expression during exciting events",
        authentic=(
            "At his own birthday party our son opened gifts like he was sorting "
            "mail. Then an hour later a ceiling fan got the biggest smile of the "
            "month. The feelings are in there, the face just picks odd times."
        ),
    ),
    # ----- A3: developing and maintaining relationships -----
    dict(
        qid="q-a3-1",
        criterion="A3",
        question="Describe this person's friendships with people their own age.",
        source=(
            "Difficulties forming peer relationships appropriate to developmental "
            "level are typical. The child may gravitate toward much older or much "
            "younger companions, interact mainly around a single shared activity, "
            "or report wanting friends while lacking strategies to make them."
        ),
        copied=(
            "The child may gravitate toward much older or much younger companions, "
            "interact mainly around a single shared activity, or report wanting "
            "friends while lacking strategies to make them."
        ),
        paraphrased=(
            "Such kids drift toward adults or toddlers instead of same-age "
            "peers, bond only over one fixed pastime, and say they wish for "
            "buddies yet cannot figure out the steps."
        ),
        keep_run=False,
        authentic=(
            "Recess is our hardest hour. My son circles the playground alone "
            "talking to himself about elevators. He tells me he wants a best "
            "friend but when a boy invites him to tag he freezes and walks away."
        ),
    ),
    dict(
        qid="q-a3-2",
        criterion="A3",
        question="Describe how this person engages in pretend or imaginative play.",
        source=(
            "Absence of shared imaginative play is a frequent early sign. Dolls and "
            "action figures are sorted or inspected rather than given roles, and "
            "invitations to join make-believe scenarios are declined or met with "
            "confusion about the invented premise."
        ),
        copied=(
            "Dolls and action figures are sorted or inspected rather than given "
            "roles, and invitations to join make-believe scenarios are declined or "
            "met with confusion about the invented premise."
        ),
        paraphrased=(
            "Figurines get lined up and examined instead of cast as characters; "
            "asked to play pretend, the child either refuses or seems baffled that "
            "the scenario is invented."
        ),
        keep_run=False,
        authentic=(
            "Her dollhouse is a filing cabinet. Every doll has a shelf and heaven "
            "help the doll that moves. When her cousin says lets make them talk, "
            "she looks at him like he suggested the couch could fly."
        ),
    ),
    dict(
        qid="q-a3-3",
        criterion="A3",
        question="Describe how this person adjusts their behavior to different social situations.",
        source=(
            "Adjusting behavior to suit varied social contexts is impaired. The "
            "same loud narration used at home may continue inside a library or a "
            "funeral service, and formal versus casual registers of speech are not "
            "distinguished."
        ),
        copied=(
            "The same loud narration used at home may continue inside a library or "
            "a funeral service, and formal versus casual registers of speech are "
            "not distinguished."
        ),
        paraphrased=(
            "Volume never shifts with the venue: the booming commentary from the "
            "living room keeps going inside a library or a funeral service, and "
            "polite speech never separates from slang."
        ),
        keep_run=True,
        keep_run_text="inside a library or a funeral service",
        authentic=(
            "We practiced whisper voice for weeks before church. He still reviewed "
            "the whole sermon at full volume from the second row. Home voice, "
            "store voice, doctor voice, all the same voice."
        ),
    ),
    dict(
        qid="q-a3-4",
        criterion="A3",
        question="Describe this person's interest in other children or peers.",
        source=(
            "Interest in peers may be markedly reduced. During group activities the "
            "individual positions themselves at the edge of the room, engages with "
            "materials rather than classmates, and appears content with prolonged "
            "solitary involvement."
        ),
        copied=(
            "During group activities the individual positions themselves at the "
            "edge of the room, engages with materials rather than classmates, and "
            "appears content with prolonged solitary involvement."
        ),
        paraphrased=(
            "In group settings they stake out the perimeter, interact with the "
            "supplies over the students, and look perfectly satisfied spending the "
            "session alone."
        ),
        keep_run=False,
        authentic=(
            "Other toddlers at daycare pile into the sandbox together. Mine sits "
            "under the slide with two trucks and zero interest in who comes or "
            "goes. The teachers say he never once asked about another kid."
        ),
    ),
    # ----- B1: stereotyped or repetitive behaviors -----
    dict(
        qid="q-b1-1",
        criterion="B1",
        question="Describe any repetitive hand or body movements you have observed.",
        source=(
            "Stereotyped motor mannerisms include hand flapping, finger flicking "
            "before the eyes, whole-body rocking, and tensing of the arms. These "
            "movements intensify with excitement or distress and can occupy long "
            "stretches of unstructured time."
        ),
        copied=(
            "Stereotyped motor mannerisms include hand flapping, finger flicking "
            "before the eyes, whole-body rocking, and tensing of the arms."
        ),
        paraphrased=(
            "Classic repetitive movements cover flapping hands, finger flicking "
            "before the eyes, rocking of the torso, and arm tensing, all ramping "
            "up under strong emotion."
        ),
        keep_run=True,
        keep_run_text="finger flicking before the eyes",
        authentic=(
            "When the microwave counts down my son bounces on his toes and shakes "
            "both wrists super fast, like he is drying them. Happy flapping, we "
            "call it. Big feelings, busy hands."
        ),
    ),
    dict(
        qid="q-b1-2",
        criterion="B1",
        question="Describe how this person arranges or plays with their toys and objects.",
        source=(
            "Nonfunctional arrangement of objects is common: vehicles and blocks "
            "are placed in precise rows or color-sorted grids, and disturbing the "
            "layout provokes significant protest followed by careful restoration of "
            "the original order."
        ),
        copied=(
            "Vehicles and blocks are placed in precise rows or color-sorted grids, "
            "and disturbing the layout provokes significant protest followed by "
            "careful restoration of the original order."
        ),
        paraphrased=(
            "Cars and bricks end up in exact lines or tidy palettes; nudge one and "
            "you trigger loud objection plus a meticulous rebuild of the pattern."
        ),
        keep_run=False,
        authentic=(
            "Every evening the dinosaurs parade nose to tail from the door to the "
            "radiator, tallest leading. I vacuumed one inch of that line once. "
            "Once. The rebuild took forty minutes and many tears."
        ),
    ),
    dict(
        qid="q-b1-3",
        criterion="B1",
        question="Describe any repetition of words or phrases you have heard from this person.",
        source=(
            "Echolalia may be immediate or delayed: the speaker repeats questions "
            "instead of answering them, or reproduces entire scripts from cartoons "
            "and advertisements hours later with matching intonation."
        ),
        copied=(
            "The speaker repeats questions instead of answering them, or reproduces "
            "entire scripts from cartoons and advertisements hours later with "
            "matching intonation."
        ),
        paraphrased=(
            "Such a child repeats questions instead of answering them, and whole "
            "cartoon monologues resurface much later, delivered in the original "
            "melody."
        ),
        keep_run=True,
        keep_run_text="repeats questions instead of answering them",
        authentic=(
            "Ask my grandson do you want milk and you get do you want milk right "
            "back. At bedtime we hear tomorrow on a very special episode in a "
            "perfect announcer voice from under the blanket."
        ),
    ),
    dict(
        qid="q-b1-4",
        criterion="B1",
        question="Describe any unusual ways this person uses everyday objects.",
        source=(
            "Idiosyncratic object use is often reported: spinning the wheels of a "
            "toy car at eye level, opening and closing doors repeatedly, or "
            "switching a light on and off in long bouts while watching the change "
            "with absorption."
        ),
        copied=(
            "Spinning the wheels of a toy car at eye level, opening and closing "
            "doors repeatedly, or switching a light on and off in long bouts while "
            "watching the change with absorption."
        ),
        paraphrased=(
            "They hold vehicles up to spin wheels inches from their face, work "
            "cabinet hinges over and over, and flick lamps on, off, on, transfixed "
            "by the flip."
        ),
        keep_run=False,
        authentic=(
            "Our remote controls live on top of the bookcase now. Not because of "
            "the television, he never watched it, but because the battery cover "
            "clicks. Click, flip, click, flip, for an entire car ride."
        ),
    ),
    # ----- B2: insistence on sameness, routines, ritualized patterns -----
    dict(
        qid="q-b2-1",
        criterion="B2",
        question="Describe how this person reacts to changes in their daily routine.",
        source=(
            "Insistence on sameness manifests as extreme distress at small changes: "
            "a substitute teacher, a detour on the usual route, or furniture moved "
            "a few inches can precipitate prolonged crying and refusal to proceed "
            "with the day."
        ),
        copied=(
            "A substitute teacher, a detour on the usual route, or furniture moved "
            "a few inches can precipitate prolonged crying and refusal to proceed "
            "with the day."
        ),
        paraphrased=(
            "Swap the teacher, take a detour on the usual route, or shift a chair "
            "slightly and the result is extended sobbing plus a refusal to carry "
            "on."
        ),
        keep_run=True,
        keep_run_text="a detour on the usual route",
        authentic=(
            "Road construction closed our street for a week and it broke every "
            "morning. My daughter cried from the driveway to the school gate "
            "because we turned left where right belongs."
        ),
    ),
    dict(
        qid="q-b2-2",
        criterion="B2",
        question="Describe this person's eating habits and food preferences.",
        source=(
            "Rigid mealtime patterns are frequent. The diet may narrow to a few "
            "beige foods of one brand, items must not touch on the plate, and a "
            "changed package design can lead to rejection of a previously accepted "
            "food for months."
        ),
        copied=(
            "The diet may narrow to a few beige foods of one brand, items must not "
            "touch on the plate, and a changed package design can lead to rejection "
            "of a previously accepted food for months."
        ),
        paraphrased=(
            "Menus shrink to a handful of pale, single-brand staples kept strictly "
            "separate on the dish; redesign the wrapper and that food is dead to "
            "them for a season."
        ),
        keep_run=False,
        authentic=(
            "Five foods. Chicken nuggets from one restaurant, crackers from one "
            "box, and three fruits, never touching. They changed the cracker logo "
            "in march and we mourned crackers until summer."
        ),
    ),
    dict(
        qid="q-b2-3",
        criterion="B2",
        question="Describe any rituals or fixed sequences this person insists on.",
        source=(
            "Ritualized patterns of behavior include fixed bedtime sequences, "
            "insistence on a particular seat and cup, and verbal routines in which "
            "family members must give the same answers to the same questions every "
            "night."
        ),
        copied=(
            "Ritualized patterns of behavior include fixed bedtime sequences, "
            "insistence on a particular seat and cup, and verbal routines in which "
            "family members must give the same answers to the same questions every "
            "night."
        ),
        paraphrased=(
            "Evenings run on rails: an unvarying pre-sleep order, one sanctioned "
            "chair and drinking vessel, and call-and-response lines the household "
            "must recite correctly."
        ),
        keep_run=False,
        authentic=(
            "Bath, teeth, two books, hall light on, door open exactly a hand wide, "
            "then i say sleep tight kiddo and he says see you at breakfast. Skip "
            "a step and we start over from the bath."
        ),
    ),
    dict(
        qid="q-b2-4",
        criterion="B2",
        question="Describe how this person handles transitions between activities.",
        source=(
            "Transitions between activities are effortful. Even with countdown "
            "warnings the individual may be unable to disengage, and unexpected "
            "endings produce outbursts disproportionate to the apparent stakes of "
            "the activity."
        ),
        copied=(
            "Even with countdown warnings the individual may be unable to "
            "disengage, and unexpected endings produce outbursts disproportionate "
            "to the apparent stakes of the activity."
        ),
        paraphrased=(
            "Five-minute warnings barely help; the child stays unable to disengage, "
            "and an abrupt finish sparks reactions far bigger than the moment "
            "seems to merit."
        ),
        keep_run=True,
        keep_run_text="unable to disengage",
        authentic=(
            "Leaving the pool is a two-adult operation even though we announce it "
            "at ten, five, and one minute. The swimming is optional, the leaving "
            "is a crisis."
        ),
    ),
    # ----- B3: restricted, fixated interests -----
    dict(
        qid="q-b3-1",
        criterion="B3",
        question="Describe any topics or subjects this person is intensely focused on.",
        source=(
            "Circumscribed interests are pursued with unusual intensity: train "
            "timetables, vacuum cleaner models, or national flags may dominate "
            "conversation, reading choices, and play to the exclusion of nearly "
            "everything else."
        ),
        copied=(
            "Train timetables, vacuum cleaner models, or national flags may "
            "dominate conversation, reading choices, and play to the exclusion of "
            "nearly everything else."
        ),
        paraphrased=(
            "Topics like rail schedules, appliance lineups, or world banners can "
            "swallow every chat, book pick, and game, crowding out almost all "
            "other material."
        ),
        keep_run=False,
        authentic=(
            "Elevators. Brands, door speeds, inspection certificates. We plan "
            "errands around buildings with interesting elevators. He has never "
            "once asked to visit a toy store, but the parking garage lift got a "
            "thank you card."
        ),
    ),
    dict(
        qid="q-b3-2",
        criterion="B3",
        question="Describe any unusual attachments this person has to specific objects.",
        source=(
            "Strong attachment to unusual objects is characteristic: a length of "
            "string, a specific bolt, or a laminated card may be carried "
            "everywhere, and separation from the item causes acute distress until "
            "it is restored."
        ),
        copied=(
            "A length of string, a specific bolt, or a laminated card may be "
            "carried everywhere, and separation from the item causes acute distress "
            "until it is restored."
        ),
        paraphrased=(
            "An odd keepsake, perhaps a length of string or a small bolt, travels "
            "in the fist all day, and losing it means misery until reunion."
        ),
        keep_run=True,
        keep_run_text="a length of string",
        authentic=(
            "A blue measuring spoon has attended every family event since easter. "
            "Not to play with, just to hold. We bought four identical spares after "
            "the great spoon scare at the zoo."
        ),
    ),
    dict(
        qid="q-b3-3",
        criterion="B3",
        question="Describe how this person shares facts or information about their favorite subject.",
        source=(
            "Information about the preferred topic is delivered in monologues rich "
            "in technical detail, continuing past clear signs of listener fatigue "
            "and resuming at the first opportunity when interrupted."
        ),
        copied=(
            "Information about the preferred topic is delivered in monologues rich "
            "in technical detail, continuing past clear signs of listener fatigue "
            "and resuming at the first opportunity when interrupted."
        ),
        paraphrased=(
            "Favorite-subject lectures arrive dense with specifications, roll on "
            "well after the audience wilts, and restart the moment a pause allows."
        ),
        keep_run=False,
        authentic=(
            "Our dinner guests now receive a heads up that the weather segment "
            "lasts twenty minutes. Interrupting does nothing, he simply bookmarks "
            "the sentence and finishes it when you breathe."
        ),
    ),
    # ----- B4: sensory reactivity -----
    dict(
        qid="q-b4-1",
        criterion="B4",
        question="Describe how this person reacts to loud or unexpected sounds.",
        source=(
            "Auditory hypersensitivity is common: hand dryers, blenders, and fire "
            "alarms can cause the individual to cover both ears, scream, or flee "
            "the room, and anticipation of such sounds may lead to avoidance of "
            "entire locations."
        ),
        copied=(
            "Hand dryers, blenders, and fire alarms can cause the individual to "
            "cover both ears, scream, or flee the room, and anticipation of such "
            "sounds may lead to avoidance of entire locations."
        ),
        paraphrased=(
            "Dryers in restrooms, kitchen mixers, and alarm bells send them "
            "clamping palms over ears, shrieking, or bolting, and dreading the "
            "noise can rule out whole venues."
        ),
        keep_run=False,
        authentic=(
            "Public bathrooms are our nemesis because of the jet dryers. My son "
            "hears one start two rooms away and he is out the door. We carry "
            "headphones the way other families carry snacks."
        ),
    ),
    dict(
        qid="q-b4-2",
        criterion="B4",
        question="Describe this person's response to the texture or feel of clothing and food.",
        source=(
            "Tactile defensiveness shows in clothing and food: garment tags are "
            "cut out, sock seams must align perfectly, and foods with mixed or "
            "slippery textures are gagged on or refused outright."
        ),
        copied=(
            "Garment tags are cut out, sock seams must align perfectly, and foods "
            "with mixed or slippery textures are gagged on or refused outright."
        ),
        paraphrased=(
            "Labels get snipped from every shirt, sock seams must align perfectly, "
            "and any dish with slick or mingled consistency triggers gagging or "
            "flat refusal."
        ),
        keep_run=True,
        keep_run_text="sock seams must align perfectly",
        authentic=(
            "We own one brand of seamless socks in bulk. Yogurt with fruit pieces "
            "is treated as a betrayal. Smooth yogurt, fine. The same yogurt with "
            "one blueberry, tragedy."
        ),
    ),
    dict(
        qid="q-b4-3",
        criterion="B4",
        question="Describe any fascination this person has with lights, reflections, or movement.",
        source=(
            "Visual fascination with lights and motion is frequently noted: staring "
            "at ceiling fans, studying reflections at odd angles, and tracking "
            "spinning objects can hold attention far longer than social events in "
            "the same room."
        ),
        copied=(
            "Staring at ceiling fans, studying reflections at odd angles, and "
            "tracking spinning objects can hold attention far longer than social "
            "events in the same room."
        ),
        paraphrased=(
            "Fans overhead, mirror glints viewed sideways, and whirling toys "
            "capture the gaze for stretches that dwarf any interest in the people "
            "present."
        ),
        keep_run=False,
        authentic=(
            "At the science museum we lost him, then found him lying under the "
            "lobby chandelier watching it sway. The dinosaur hall, the robots, all "
            "of it lost to one shiny fixture."
        ),
    ),
    dict(
        qid="q-b4-4",
        criterion="B4",
        question="Describe how this person explores objects with smell, taste, or touch.",
        source=(
            "Unusual sensory exploration includes sniffing toys and people, licking "
            "non-food surfaces, and running objects along the cheek or lips to "
            "inspect them before any conventional use is attempted."
        ),
        copied=(
            "Unusual sensory exploration includes sniffing toys and people, licking "
            "non-food surfaces, and running objects along the cheek or lips to "
            "inspect them before any conventional use is attempted."
        ),
        paraphrased=(
            "New items are vetted by nose and cheek long before normal use; "
            "licking non-food surfaces happens too, and people get sniffed in "
            "greeting."
        ),
        keep_run=True,
        keep_run_text="licking non-food surfaces",
        authentic=(
            "Every new library book gets smelled cover to cover before page one. "
            "New people also receive the sniff review, which makes introductions "
            "memorable. Shopping carts had to stop being licked, that was a rule "
            "we actually wrote down."
        ),
    ),
    dict(
        qid="q-b4-5",
        criterion="B4",
        question="Describe this person's reaction to pain, temperature, or injury.",
        source=(
            "Apparent indifference to pain or temperature is reported in many "
            "cases: significant bruises go unmentioned, winter coats are refused in "
            "freezing weather, and hot bath water does not prompt withdrawal."
        ),
        copied=(
            "Significant bruises go unmentioned, winter coats are refused in "
            "freezing weather, and hot bath water does not prompt withdrawal."
        ),
        paraphrased=(
            "Large bruises pass without comment, jackets stay off in deep "
            "cold, and scalding tubs never cause a flinch."
        ),
        keep_run=False,
        authentic=(
            "He broke a toe at gymnastics and we learned about it at the shoe "
            "store days later. Meanwhile a single drop of rain on his sleeve can "
            "end an afternoon. The dial is just set differently."
        ),
    ),
    dict(
        qid="q-b4-6",
        criterion="B4",
        question="Describe any movement or physical sensations this person seems to seek out.",
        source=(
            "Sensory seeking presents as craving motion and pressure: prolonged "
            "swinging and spinning without dizziness, jumping from furniture onto "
            "cushions, and requesting tight squeezes or heavy blankets to settle."
        ),
        copied=(
            "Prolonged swinging and spinning without dizziness, jumping from "
            "furniture onto cushions, and requesting tight squeezes or heavy "
            "blankets to settle."
        ),
        paraphrased=(
            "They chase vestibular input: endless swing sessions, twirling that "
            "never staggers them, couch-to-pillow leaps, and requesting tight "
            "squeezes or weighted covers at night."
        ),
        keep_run=True,
        keep_run_text="requesting tight squeezes",
        authentic=(
            "Our porch swing has done more miles than the car. She spins in the "
            "yard until the grown ups are dizzy from watching, then asks to be "
            "rolled up in the comforter like a burrito before bed."
        ),
    ),
]

GIBBERISH_PROBE = "asdkf qwelkj zzxcv"


def iter_texts():
    for item in ITEMS:
        yield item["source"]
        yield item["copied"]
        yield item["paraphrased"]
        yield item["authentic"]
        yield item["question"]


def build_lexicon_file(path: Path) -> Lexicon:
    base = (REPO / "src" / "crowdqc" / "data" / "wordlist.txt").read_text().splitlines()
    words = {w for w in base if w and not w.startswith("#")}
    for text in iter_texts():
        words.update(normalize(text))
    with path.open("w", encoding="utf-8") as fh:
        fh.write("# Word list for the demo dataset: common English plus the\n")
        fh.write("# vocabulary used by the demo corpus and responses.\n")
        fh.write("\n".join(sorted(words)) + "\n")
    return Lexicon.from_file(path)


def verify(lexicon: Lexicon) -> list[str]:
    problems = []
    docs = [CorpusDocument(item["qid"], item["source"]) for item in ITEMS]
    backend = OfflineSearchBackend(build_index(docs))
    cfg = QCConfig()

    corpus_grams = {}
    for item in ITEMS:
        corpus_grams[item["qid"]] = ngrams(normalize(item["source"]), 3).grams

    for item in ITEMS:
        for kind in ("source", "copied", "paraphrased", "authentic"):
            tokens = normalize(item[kind])
            validity = lexical_validity(tokens, lexicon)
            if validity < 0.99:
                missing = [t for t in tokens if t not in lexicon]
                problems.append(f"{item['qid']}/{kind}: lexicon misses {missing}")

        src_tokens = normalize(item["source"])
        cop_tokens = normalize(item["copied"])
        verbatim = any(
            src_tokens[i : i + len(cop_tokens)] == cop_tokens
            for i in range(len(src_tokens) - len(cop_tokens) + 1)
        )
        if not verbatim:
            problems.append(f"{item['qid']}: copied text is not verbatim from source")
        if item.get("keep_run"):
            if item["keep_run_text"] not in item["source"]:
                problems.append(f"{item['qid']}: keep_run_text not in source")
            if item["keep_run_text"] not in item["paraphrased"]:
                problems.append(f"{item['qid']}: keep_run_text not in paraphrase")

        auth_grams = ngrams(normalize(item["authentic"]), 3).grams
        for other_qid, grams in corpus_grams.items():
            overlap = auth_grams & grams
            if overlap:
                problems.append(
                    f"{item['qid']}: authentic shares {sorted(overlap)} with {other_qid}"
                )

    flagged = {"Copied": [], "Paraphrased": [], "Authentic": []}
    for item in ITEMS:
        for category, key in (
            ("Copied", "copied"),
            ("Paraphrased", "paraphrased"),
            ("Authentic", "authentic"),
        ):
            resp = CandidateResponse(
                worker_id="gen", question_id=item["qid"], session_id="gen", text=item[key]
            )
            verdict = validate(resp, cfg, backend, lexicon)
            if verdict.decision.value != "accept":
                flagged[category].append(item["qid"])
                if category == "Paraphrased":
                    grams = sorted(" ".join(g) for g in verdict.shared.grams)
                    print(f"  {item['qid']} paraphrase flagged via: {grams}")

    if len(flagged["Copied"]) != len(ITEMS):
        missing = [i["qid"] for i in ITEMS if i["qid"] not in flagged["Copied"]]
        problems.append(f"copied items NOT flagged: {missing}")
    if flagged["Authentic"]:
        problems.append(f"authentic items flagged: {flagged['Authentic']}")
    print(
        f"paraphrase split: {len(flagged['Paraphrased'])} flagged / "
        f"{len(ITEMS) - len(flagged['Paraphrased'])} passed "
        f"-> {sorted(flagged['Paraphrased'])}"
    )
    return problems


def write_corpus_and_items() -> None:
    with (FIXTURES / "corpus.jsonl").open("w", encoding="utf-8") as fh:
        for item in ITEMS:
            fh.write(json.dumps({"doc_id": item["qid"], "body": item["source"]}) + "\n")
    with (FIXTURES / "robustness_items.jsonl").open("w", encoding="utf-8") as fh:
        for category, key in (
            ("Authentic", "authentic"),
            ("Copied", "copied"),
            ("Paraphrased", "paraphrased"),
        ):
            for item in ITEMS:
                fh.write(
                    json.dumps(
                        {
                            "question_id": item["qid"],
                            "text": item[key],
                            "category": category,
                        }
                    )
                    + "\n"
                )


def write_study_config() -> None:
    config = {
        "quota": 10,
        "fail_open": True,
        "lexicon": "lexicon.txt",
        "backend": {"kind": "offline", "corpus": "corpus.jsonl"},
        "qc": {
            "n": 3,
            "gibberish_threshold": 0.5,
            "empty_result_policy": "accept",
            "search_check_enabled": True,
            "paste_restriction_enabled": True,
            "min_completion_seconds": 10,
        },
        "rewards": {"qualification": 0.10, "per_question": 0.40, "currency": "USD"},
        "questions": [
            {"id": item["qid"], "dsm_criterion": item["criterion"], "prompt": item["question"]}
            for item in ITEMS
        ],
    }
    (FIXTURES / "study_config.json").write_text(
        json.dumps(config, indent=2) + "\n", encoding="utf-8"
    )


def write_expert_ratings() -> None:
    # Per-criterion layout: (unintelligible, intelligible, exact_match,
    # then per-column value multisets over the intelligible records).
    plan = {
        "A1": (9, 16, 9, [5] * 5 + [4] * 11, [2] * 15 + [1], [2] * 7 + [1] * 9, [5] * 3 + [4] * 13),
        "A2": (13, 12, 7, [5] * 4 + [4] * 8, [2] * 2 + [1] * 10, [2] * 8 + [1] * 4, [5] * 12),
        "A3": (13, 12, 10, [5] * 4 + [4] * 8, [3] * 3 + [2] * 7 + [1] * 2, [1] * 12, [5] + [4] * 11),
        "B1": (8, 17, 10, [5] * 5 + [4] * 12, [2] * 10 + [1] * 7, [2] * 15 + [1] * 2, [5] * 10 + [4] * 7),
        "B2": (10, 15, 14, [5] * 3 + [4] * 12, [2] * 15, [1] * 15, [5] * 2 + [4] * 13),
        "B3": (13, 12, 11, [5] * 4 + [4] * 8, [2] * 8 + [1] * 4, [2] * 9 + [1] * 3, [5] * 5 + [4] * 7),
        "B4": (13, 12, 11, [2] * 4 + [1] * 8, [5] * 5 + [4] * 7, [2] * 4 + [1] * 8, [5] * 5 + [4] * 7),
    }
    rows = ["response_id,criterion,intelligible,exact_match,typical,normal,not_typical,ehr_match"]
    counter = 0
    for criterion, (unint, intel, exact, typ, norm, ntyp, ehr) in plan.items():
        assert len(typ) == len(norm) == len(ntyp) == len(ehr) == intel, criterion
        for i in range(unint):
            counter += 1
            rows.append(f"x{counter:03d},{criterion},0,0,NA,NA,NA,NA")
        for i in range(intel):
            counter += 1
            is_exact = 1 if i < exact else 0
            rows.append(
                f"x{counter:03d},{criterion},1,{is_exact},{typ[i]},{norm[i]},{ntyp[i]},{ehr[i]}"
            )
    (FIXTURES / "expert_ratings.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")


def find_ages() -> list[int]:
    """26 ages: min 23, max 70, mean 42.5, population SD printing 13.4."""
    ages = [23, 24, 27, 28, 28, 29, 30, 30, 32, 32, 36, 39, 42, 45, 46, 46,
            47, 52, 53, 53, 53, 54, 61, 62, 63, 70]
    assert len(ages) == 26 and sum(ages) == 1105
    assert min(ages) == 23 and max(ages) == 70
    mean = sum(ages) / 26
    sd = math.sqrt(sum((a - mean) ** 2 for a in ages) / 26)
    assert round(round(sd, 2), 1) == 13.4
    return ages


def write_roster() -> None:
    n = 26
    sexes = ["Female"] * 14 + ["Male"] * 12
    races = ["Asian"] * 2 + ["Black or African-American"] * 3 + ["White"] * 20 + [None]
    ethnicities = ["Hispanic or Latino"] + ["Not Hispanic or Latino"] * 25
    education = (
        ["High school diploma"] * 3
        + ["Associate degree"] * 3
        + ["Bachelor's degree"] * 12
        + ["Master's degree"] * 8
    )
    ages = find_ages()
    professions = (["healthcare"] * 5 + ["education"] * 3 + ["other"] * 18)
    masters_flags = [True] * 6 + [False] * 20
    with (FIXTURES / "roster.jsonl").open("w", encoding="utf-8") as fh:
        for i in range(n):
            profile = {
                "worker_id": f"w{i + 1:03d}",
                "country": "US",
                "approval_rate": 98.0 + (i % 3),
                "has_platform_masters": masters_flags[i],
                "sex": sexes[i],
                "race": races[i],
                "ethnicity": ethnicities[i],
                "education": education[i],
                "age": ages[i],
                "profession": professions[i],
            }
            fh.write(json.dumps(profile) + "\n")


def write_evaluator_ratings() -> None:
    # 290 rated responses; 188 both-good, 11 good only for e1, 9 good only
    # for e2, 82 both-bad. Merged Overall Good lands at 68.3% (1 dp).
    rows = ["response_id,evaluator_id,overall_good"]
    for i in range(1, 291):
        if i <= 188:
            r1 = r2 = 1
        elif i <= 199:
            r1, r2 = 1, 0
        elif i <= 208:
            r1, r2 = 0, 1
        else:
            r1 = r2 = 0
        rows.append(f"r{i:03d},e1,{r1}")
        rows.append(f"r{i:03d},e2,{r2}")
    (FIXTURES / "ratings.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")


def write_collected_responses() -> None:
    picks = [
        ("resp-01", ITEMS[0]["authentic"], 95.0),
        ("resp-02", ITEMS[1]["authentic"], 120.0),
        ("resp-03", ITEMS[2]["authentic"], 88.0),
        ("resp-04", ITEMS[3]["authentic"], 46.0),
        # exact duplicate pair
        ("resp-05", ITEMS[4]["authentic"], 70.0),
        ("resp-06", ITEMS[4]["authentic"], 4.0),
        # near duplicate: last word changed
        ("resp-07", ITEMS[5]["authentic"], 150.0),
        (
            "resp-08",
            ITEMS[5]["authentic"].rsplit(" ", 1)[0] + " concentration.",
            6.0,
        ),
        ("resp-09", ITEMS[6]["authentic"], 112.0),
        ("resp-10", ITEMS[7]["authentic"], 64.0),
    ]
    with (FIXTURES / "responses.jsonl").open("w", encoding="utf-8") as fh:
        for rid, text, elapsed in picks:
            fh.write(
                json.dumps(
                    {
                        "response_id": rid,
                        "text": text,
                        "elapsed_seconds": elapsed,
                        "worker_id": "w001",
                        "question_id": "q-a1-1",
                    }
                )
                + "\n"
            )


def main() -> int:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    assert len(ITEMS) == 29, len(ITEMS)
    lexicon = build_lexicon_file(FIXTURES / "lexicon.txt")
    problems = verify(lexicon)
    write_corpus_and_items()
    write_study_config()
    write_expert_ratings()
    write_roster()
    write_evaluator_ratings()
    write_collected_responses()
    if problems:
        print("PROBLEMS:")
        for p in problems:
            print(" -", p)
        return 1
    print(f"wrote fixtures for {len(ITEMS)} questions -> {FIXTURES}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
