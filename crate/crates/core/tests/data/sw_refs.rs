// Frozen Shapiro-Wilk reference datasets. Expected W and p computed with
// scipy.stats.shapiro (scipy 1.15.3) as an independent reference implementation.

pub struct SwRef {
    pub name: &'static str,
    pub kind: &'static str,
    pub expected_w: f64,
    pub expected_p: f64,
    pub data: &'static [f64],
}

pub const SW_REFS: &[SwRef] = &[
    SwRef {
        name: "normal_n5_s101",
        kind: "normal",
        expected_w: 0.92751928739255107,
        expected_p: 0.57955416834310092,
        data: &[-0.79015249996301462, -2.0346254818318728, 0.60330174692476468, 0.74429452987991185, -0.30968679986627135],
    },
    SwRef {
        name: "normal_n12_s102",
        kind: "normal",
        expected_w: 0.9365631832824074,
        expected_p: 0.45487222892518497,
        data: &[0.62572939825715079, 2.1643253589526661, 0.95554055869570742, -1.0802324230246478, -0.59367512737562644, 0.86121905566906887, -0.043934423408633641, 1.1924864710821501, -1.9422328593713081, 2.1129201593831803, 1.8849826072080755, -1.4481993417672274],
    },
    SwRef {
        name: "normal_n25_s103",
        kind: "normal",
        expected_w: 0.97925432536598855,
        expected_p: 0.86993463170338947,
        data: &[1.1033480291669078, -1.2797841239751133, 0.64815244600979349, -1.1995804426934285, 1.0718006981155832, -1.5560715349108816, -0.71053096303415331, -0.6066608632747601, -2.1053225740681181, 0.85277373228264663, -1.5513866097433351, -1.3072612121831773, -0.56469636648293287, 0.74423744713126105, -0.81334721713780389, 1.9887832560377303, -0.024931994583228097, -0.28905240779474911, 0.44859273128233662, -0.13116896935926167, -1.0577035802126351, -0.54986939715805305, 0.16674786272571779, 1.5769562892902138, 0.2634458631344247],
    },
    SwRef {
        name: "normal_n50_s104",
        kind: "normal",
        expected_w: 0.98414446183088422,
        expected_p: 0.73429340352226136,
        data: &[0.56211665468811844, 0.56020051947349581, -0.62245672536941044, -0.00981504446292902, 0.00053793179687283254, 0.057427435293757517, 2.1827353149228874, -0.28384658511372962, -0.2918414767913422, -0.45808678224024874, 1.0360084458012735, -0.41285520482296567, -0.088238606576966819, 0.88056729936605271, 0.76140506202549108, -0.97453471845084361, 1.8149398181019112, 0.27746726619327122, 0.9508318268926117, 0.330994128784945, 1.7157791766873101, -0.34751709917924828, -0.62213067049103221, 0.41314764497061002, 1.3909164217176204, -0.0086996630924936289, 0.91188744169587299, 1.5732061392170742, -1.4038758246581318, 1.3962746946529592, 1.1579501559291507, -0.47221636697290548, -0.035367987162399243, -0.45182272451530592, 0.84715943922034798, -0.60139528729195491, 0.66824654997368471, 1.4154224567570421, -1.7327119662958588, 0.45584930000394674, -0.05027535860601072, -0.4717914829822934, 0.46831715027684095, -0.10515117637347106, -1.531273914208199, -0.58369775360478082, -0.0052329566617386313, -0.73467845330383252, -1.3312344973345973, 2.4909728124855341],
    },
    SwRef {
        name: "normal_n100_s105",
        kind: "normal",
        expected_w: 0.98816604984701961,
        expected_p: 0.5205303868032426,
        data: &[-0.063454207685754105, 1.2492131101839494, 1.9880112028878816, -0.053374981120936464, -0.23915753258471148, 1.0620296514037033, 0.058466010589202269, 0.81339641561536047, 1.6014122751018256, 0.56017249823119075, 1.0882944407648927, -2.3304559919767511, 1.0498919768253152, -0.15836698771507549, -0.93506126288638225, -0.14514625838211553, -1.184148904198064, -1.1704272275457444, -2.0393923118137125, -0.6377950255711462, -1.3642770368237789, -0.79944097854675078, 0.80942282674681965, 0.058551039553268756, -1.2872333129558826, 0.45425519208872228, 0.99653089868483458, 0.025148617607592599, 0.013056973198579687, -0.1145482723788421, -1.0184416031798185, 1.0371978363969327, 0.45779992992026242, -0.10122778418511208, -0.069106975624798533, -0.17056936957999616, 1.4737203882804777, -0.32078024105338954, -1.7398378698236534, 0.10843765639528084, 0.86536282824820265, 0.64170022419686346, -0.42526943738821421, -1.6729728752269393, 2.0501037929817461, -1.034605510752475, 0.092962446127996631, -0.20948603269271018, -0.71359327101339898, -0.49423406994979135, -1.1858134084039857, -0.98668335701993715, -0.59363300042252176, -0.21398092062732832, 2.3621378761877931, -1.092013457546283, 1.0419645791814691, -0.024869086459265478, -0.50040802816862828, -1.5369733417895965, -0.1749203912442473, -1.1651581666307487, 0.16203321105212923, 0.23487817892581803, -1.3365108548837059, 1.0388803187566944, -0.27602722285506454, -0.064321101155614846, 0.20151552756671814, -0.45680016990089567, 0.98006057073761255, 1.5786001266557841, 0.1447282883726958, 0.91115306253189821, 1.9036514881859046, 0.70375581736716675, -0.20398793293437587, 1.237087452720169, 0.17300807319784323, -0.15237548503283746, -1.4167782211349518, 0.17698485974455508, -0.83056094255530821, 0.27612254301632011, -2.1137547041015496, -1.190887088726539, 1.4759924081806763, 1.7574356644721152, 0.35740881967126337, 0.26071624687189621, -2.3848983469624327, 0.42667592174294255, -0.74479724280937698, -2.2734370863326676, -1.1137892779159688, -1.1790676839306065, 0.5785032776906579, 0.093364924998960666, 2.3314141765064638, 1.4190965849321588],
    },
    SwRef {
        name: "normal_n250_s106",
        kind: "normal",
        expected_w: 0.99614252882890231,
        expected_p: 0.79705941171300498,
        data: &[0.88261929714001242, 0.32425378596150112, 0.4921243078878566, -0.16874548542199747, 0.95752554252432964, -1.5247462502871534, 1.1298374179734072, -0.28582784655936622, -0.18367279188336341, -1.062469611878496, -1.6297019485694437, -0.46449237618694411, 0.70634410576006035, 0.29030968490382486, 0.8532463517653569, -0.23257199233951159, 0.20083123275020465, -0.15088421833287763, -1.0790909076207886, -0.1040202838969831, -0.46177963595694321, 0.77539767773800539, -0.22134994876690905, -0.053861284845669925, 0.52209930317972675, 0.90306902335025052, -0.13060889332689668, -0.14774221454458414, 0.15389679690728914, 0.99571897165335843, -0.9387296995239558, -1.1072844302011478, 2.8742553151724795, -0.1551743947514948, 0.090257414623420656, -2.0736273498600148, -0.45795777498533113, -0.15536257948369869, -0.60759068554472784, -0.44865612162862673, -0.20142493294500075, 0.29194944678614004, 0.89582008219401232, -1.2571827510200946, -1.2898518577637144, 0.50754297324226705, 0.14628781576586941, -0.87376348872708121, -1.4047992731414651, -0.81452656788596955, -0.031038580619794618, 0.57212359139710844, 0.96536992284833267, 0.68958542500326991, -1.0310368355442374, 1.7085100969247964, 0.65172162190803828, -0.14667675974900668, -0.19354106388288184, 0.8778318271283575, -0.44809901871296326, -0.3511851052472425, 0.069201302266336986, 1.3884787415422184, -1.4494042470362116, 0.94960324401806506, -2.0952519926868751, -0.94171867454956404, 0.11771531569233441, 0.92548867971938942, -1.3302591822699545, 0.91359405546094818, 1.1354396970277338, -0.49363451126726693, -0.33837796262801606, -0.23321181891939849, -1.9349402104758284, 2.3888422491157817, 0.47325602136028616, -1.3371459748734484, 0.53875512361846023, 0.43683662659348738, -0.1972105561818111, 0.1203558747224369, 0.92143640254556336, -0.4974566375455533, -0.96460314122101665, 1.7208631092101114, 0.38620587594222938, -0.41331954205446381, 1.6085795075256411, -2.2285998240899976, -1.1101774128941273, 0.62659587937954575, 0.20094765340266837, 0.28243921632102054, -0.55751035396465953, -0.66118854937096683, -0.56661455241273639, -0.38628522740351573, 0.64722269100999297, 0.9863078388024098, 0.55448630282910649, 1.3712432026211334, -1.7139178663163952, -0.1665893324467663, -1.0729213099161785, 1.729311793697039, -0.26842215743160358, 0.58195015095862157, 0.18264313081115474, -0.77983924521224479, -0.93101150645955788, 0.47653779138135977, 0.71972596563804359, -0.49611120336013098, 1.7413673794507192, 0.047056592343352473, 0.83088725422112519, 0.33040876453475065, 0.94805838650404972, -1.527733312326232, 1.4586317356146696, 0.81450267192842851, 0.78611592739410052, 1.2479982272244443, 0.61844887735158249, -1.4619240569872625, -0.57702466401264785, -1.1693935576742329, -0.57414842609429406, 0.5325137858628487, 1.4232926020773407, -1.5031295605530657, -1.2344715826921315, -0.063504199862241845, 0.4344014455071909, 0.16085895076958129, -0.65653836087326289, 0.31025623096170241, 0.24785439226422609, -0.84518252408483818, 1.1556628890165865, -1.571103762460301, -0.073851958182916635, -0.11296448935088653, 0.30594629332186779, 0.89123873366918349, -0.57108388114835162, -0.18523764692797934, 0.50458150865828177, 1.5656989738685996, -0.70650319087546021, 0.61829295077616098, 0.14752539313509686, -0.93112329696642648, 0.47627034921748063, -1.0039702932003527, -0.030306090606699875, 0.13809360688703734, 2.1358877473748876, -0.91888011761079957, 0.68181418407857286, 0.25774771605242269, -0.11924962388154912, -0.35625054176733589, 1.4161331278789788, -0.59536098915905555, 0.79982924685307, -0.19804891148157522, 0.67607055157228357, 0.81578315270981483, -1.5281658717069684, -0.93540804283863432, -0.082914569063313098, 0.098458286082792182, -1.3817224797598793, 0.42931654572188671, 0.94424741896962272, -0.065473321705991447, 0.15017504153842184, -1.2092317375070025, 1.0865534729344928, 1.8290634389344733, 2.7576469745462631, 0.17576755664711793, 1.8650041027943582, -0.53452194660903962, 0.41383984550691688, 0.1122590598640635, -1.5132781645443147, -0.63037055427753264, -0.006594640212049043, -0.011857276692334067, -0.45322945637096701, -0.04564770447125531, 0.84902288655861335, 1.0851706120779192, -2.2604771267391932, -0.53764809390587986, 0.0058792639294822221, -2.3852816916039132, 0.41258532221005889, 1.2755652509290312, -1.3776327455223654, -2.3194450235587847, -0.5737157069968567, 1.308943831442924, 2.7217519519144946, 0.39744737431779203, 0.01881198366514604, -0.86501011195550492, 0.71533249648951636, -0.74615393777881134, 0.13860403462260656, 1.1028441127360673, 0.13541413730223417, -0.98512271383838013, 0.38628536870240188, 1.1815331443308348, 1.2472820757822134, -1.6093475102900994, 0.48580605098812474, 0.51509220372983799, -0.23308400426153095, -1.0690865178744733, -0.69537625793240476, -0.77998497600402805, 2.1596562721340065, 0.33981018806744184, -0.18234896725572516, 0.47946172616015759, 1.4887175525508183, 0.043180172179833345, 0.96513381191092296, 0.78886614360116203, -0.33896450303236747, 1.6867857633023844, 0.41590312107820998, 1.2782957405695057, 1.5252578036235862, -0.29959640733752807, -0.66402565720641105, -0.48017807153505065, 2.3387687223020315, 0.18007374333416057, -0.22972893802285546, 1.6960655436872414, -0.56126789553841028, 2.0300393644977386],
    },
    SwRef {
        name: "normal_n500_s107",
        kind: "normal",
        expected_w: 0.99708026911370884,
        expected_p: 0.51724391633408739,
        data: &[0.379668974885706, -1.8875993871702208, -0.044157993978329632, 1.7791259827385877, -1.5034280274071288, 0.5992562426037874, -0.59198945105472911, 1.5873911897579949, -0.44363893198777016, -0.60727680016732433, 1.7068373071327672, 1.3185384537507001, -0.33325095444910396, -1.9945009895417229, -1.6621988296934957, 0.4785139918394023, 0.49973443515677768, -1.4322528011738129, 1.2907856752429656, 0.56840482829571848, -0.51115039838995724, -0.11829362024204641, 0.21311402355259912, -0.57558675316191643, 0.7274430364778034, -0.15491288468632564, -0.14216086409331974, 0.96352879564023775, 0.48305989961435575, -1.4991728695041193, 0.023379235083122032, -1.0679973963237717, 0.18988839891050127, 0.46590091793692212, -1.3853534068495541, 1.0111467541692956, 1.854162726914683, 0.41334735956706642, -1.140094713222523, -0.14681178902464137, 0.32325283312781888, 0.51259010311428133, 0.5817207569849171, -0.71651895684479083, -0.48940266084759637, 0.77329152703958026, 3.0426238173238027, 0.31766538663172278, 0.024270459720261695, 0.6661669543193246, 1.7732349260056037, 0.12417611217454187, -2.5461589709341359, -0.50405737494536196, -0.68618778766607436, -1.0551416479191025, -1.3865711994624874, -0.97403566093845295, 2.5742760931099866, 0.74149736474263406, 0.2326607775926314, -1.3243343221947561, -0.44095376917302032, 0.35719450950165094, -0.1957359044474242, -0.20351288851213001, 1.655721160316034, 1.3931713812656765, 0.52720626041855512, -1.6346047727993815, 0.078198512985367008, -1.1791010787944314, -0.77008673802469629, -0.21621881303422108, 0.29036701919353819, 0.96297767736416684, -2.4726434380904374, 0.66678593823102161, -0.67048599101264095, -0.10385186929782804, -0.99491910226750302, 1.5384287655133031, -0.069768090360431453, 0.78717768958807721, -0.89229838982416998, 0.96813766298577542, 0.14323755546552999, -0.90526871146441434, -0.25926085233445895, -0.68853943674630491, -0.89616974252377246, 1.3133474104395233, 0.20187817520136014, -0.50633815334353505, -1.6973375204128147, 0.93615844875311061, -0.1752093601828579, -0.45330366724584364, -0.95706509956923358, 1.4208035728262101, 1.0782714385043992, -0.49440789085597919, -0.6538960929028016, -0.54241776522256502, -0.28793237062412913, -0.16255851107544503, -1.5886534237595524, -0.84030949099918795, -0.15143680573874616, 0.9345799621896822, 0.43346353521684006, 0.021668231470577563, -0.96738831950829862, 0.24704142208800423, 0.69862275914648309, 0.83323473242038371, 1.2045722698142283, -0.43787433418396382, -0.73196730088259665, 0.96747409436165677, -0.59496911602754521, 0.49037655701019089, -0.078824777029187984, -1.6485211934859136, -0.10722117389239762, -0.35179147007100803, -0.49708907243812045, -0.61048487770371362, -1.4723369872694072, -0.73935402849984, -0.68340685451915484, 0.82696918203981429, -0.43273219398424539, 0.068021391006857224, 1.5341010515563258, -2.0809174755831701, 0.91927932462856787, 0.064412049137414135, -0.5382171368677815, -1.3901945104573143, 0.9626890305718212, 0.22654492171705773, -0.47218506685326833, -1.21721239811139, 0.97322996661390082, 1.5176299679103415, -0.97434870899357995, -0.10020537874790697, 0.31774564445840991, 0.86820657090486997, -0.4155614688659241, 2.072256097813137, -0.05180315648604316, -0.3320760775620385, -0.81833703433772154, -1.1358186477758037, 0.73090319405305193, 0.069944041108011584, -0.79302503773482735, -1.0041717842867202, 0.99760737005201716, 1.1773332138818728, 0.65562773310261735, 0.1956025390472064, -0.53790463983274273, 1.0768708370925908, 1.35836808163154, 0.28274642225291086, -0.15545622549207602, 1.7777387102154569, -0.69543129744666099, 0.53929534272961777, 2.2098521851973274, 0.21837815916939013, -0.079229801072576614, -2.1098999817230784, -0.80359492763496843, -0.039431519320962539, 2.0048028801502249, -1.149208374653873, 2.4080281751869954, 0.15326319760529689, -0.12022811967890455, 0.57483264553083746, -1.166962357644215, 0.62046596289609435, 1.7698883257099733, -1.8645681831844401, -0.81243605249529727, -1.1997920522270316, 0.25917025486336615, 0.23089158914243074, 2.0026616401379527, -1.0241388788549026, 1.2818287504452395, -0.4079719709057813, 0.53228793393351326, -0.039846420000408223, 0.74322040634581554, -0.82541404306565547, 1.0809515579787419, 0.79376037024050783, -1.5682798508920774, -0.41903815720421156, 0.22671229832042408, -1.2014373667067968, -1.2537781435475663, -0.75115788513041049, 0.26244353218405747, 0.42945436172056811, -0.95181675868719462, 0.50045584842845392, -2.0201214260073592, 2.2093459581834995, -0.35907678876538196, 1.5366863759264213, -0.3322844439598549, -0.25128757074082497, 0.5804768915185966, 0.45298181532258563, -1.4691682690153038, -0.447514456259479, -0.040765383863634444, -0.28162696082637445, -0.27222767300968981, -0.40778878335962226, -0.3273634163280017, 0.59023589962478773, -0.033683626362128793, -0.19888587615667058, -0.76211940961159752, 1.2841062680389961, -0.21788712822035605, 1.6390145667072726, -0.19148859161456386, -0.9346263913037306, -0.17715609339198335, -0.26118014321275884, -0.24522915334389259, -0.037141684552513918, -0.089145064633072257, 1.2581448377453919, -0.85103956225109567, -0.98409040740223719, -0.96714257538347537, 1.2755688809564651, -0.18228869892929761, 0.20277090748381746, 1.4128203394548822, 0.14535022483756804, -1.3337186546234063, 0.44510079426469024, 1.1059445162440982, 2.1784605928472911, 1.5395005913559598, 0.13950343210614513, 0.18098034043994254, 0.15342661517404446, -0.38485144377528008, 1.4698569952611564, -0.22432609902168149, -0.38084254156135622, -1.2551314244842242, -1.620987818060541, -0.29973844511174969, 0.55625847028390396, -0.98777481088389085, -0.53236501362309507, -1.3478656494377337, -1.1262467279234079, -0.91567612746304849, 0.90614878217997497, 2.2108128711210413, 1.1603644683174859, 0.22681094667336829, -0.62961050610777813, 1.1128561277942113, -0.97716078261519024, -1.4210943580741151, 1.1643100851565753, -1.3750331205779815, 1.0117230178789447, -0.081040451291981785, 0.87141075235408294, -1.7066704701870332, 0.50517826276762234, 0.45488189893553355, 0.62237524244871389, -1.4150102512221689, -0.46248980413612234, -1.6805964826310371, 1.4035183675347516, -0.17926863635199158, -0.27602585216274889, 0.87570580239327744, -0.55144630676701978, 0.037521926225102933, -0.46939665285036752, 0.59183882585770775, -2.3603925091996114, 1.0359262296288192, 0.039146320405728831, -1.1057516785937487, 1.1230986001009471, 2.1489441509734806, -0.79409713122957404, 0.019798731423931522, 0.037990429958273106, 0.62482116902783447, -1.5285800804453329, -0.072971841347222344, -0.79114673513410394, 0.28365368459837459, -0.96497825340293608, -0.52232143951854704, -0.62814013510085986, -0.61019947048993173, -0.0039712114927291497, 0.057977085907585331, -1.3952805707391609, -0.64682408870458419, -0.22265314271504985, 0.68944941911231328, 1.3609172721725844, -0.28087277915610676, 0.38450647269890981, 1.4401205399559343, 0.76594584025508849, -0.26582203423905709, -0.22749610799140138, -0.93563824475433399, 1.7898719448420846, 0.5324682535285904, -0.24144664867986701, -0.14089004032340913, 1.400753788805382, 1.0512984856491041, 1.0584443862905537, 1.0239903305712676, -0.47331153089881489, -0.52342937053329819, 0.4079051745745772, -0.39942055623735412, 0.30871009307919917, -0.28368006054181016, -0.14768895093773204, 1.0336230001136366, -0.63859829704414317, -0.52310867063652899, 1.6420833513235611, -1.2762627783205371, 0.36661072306613712, 0.056748115784368593, -0.3777319987446483, 1.7071793277422265, -0.60535463661998423, -2.1266927822919723, 1.1514290353733534, 2.0271487049830785, -1.5622969128156072, 0.35812640502702769, 0.083063546753761597, 0.23614077794175597, 0.82893332450723189, 0.30966452690442203, 0.41208142049374491, -1.6653215273275308, -1.3209896548145101, 0.77319603170654561, 0.20320549637469618, 0.46703642559946312, 0.81403429758660251, -1.5691033000397414, -1.6802178563884895, -0.82787424173811019, 0.62912864786954925, 0.15085024126046928, -1.1911844455688032, -0.29734861206796609, -0.045646107355149991, -0.34582837471785066, -0.10373835849482099, 1.286355924863507, -0.071090889189666898, 0.15133446029600187, -0.61772474960912527, 1.7341271877879176, 0.47016585861381949, -0.12365170481665468, 0.066709465293920411, 0.91182969096970923, -0.77880695253698717, 1.1327058357042485, -1.3117317559545523, -1.3314748348048049, -0.84253466510137742, -1.5952906294247886, 0.39151406036827391, -0.27160498264755983, 0.27283271329385084, 1.385493428357107, -1.0305730240829107, 0.7443612027453288, -0.46204028895594829, 0.84489673466186876, 1.054716657326267, -0.25661457602483545, 0.70910470205552412, -0.28268457334697977, 1.5023938786973157, -0.75312292050862273, 0.17871435204665626, -1.5096429957776996, -0.78218273395230464, 0.46104362049752845, 0.58828196215454831, 0.49090964893966516, 2.7454951082010903, 0.79081962636652636, -1.150422325082689, 0.049589510059120719, 0.77735229229226677, -0.79251757599538475, -1.1945772110017117, 1.3590420538907206, 0.17969642715518303, -1.9027630511228937, -0.16330964584748714, 0.36762874548216168, 0.44305286657444698, 0.3752978015900017, 0.34626158580661864, -0.53401891363640086, -0.26040188570326489, 0.43833521294859146, -0.24584404451639086, 1.1441013443052381, -0.86971559780537167, 0.13642706050407613, 0.47131483795233947, 0.37857706642716521, 0.24152073497098026, -0.32610970771076347, -0.46956852016217143, -1.3457014078629796, -0.4720542115666565, 0.50266467648560975, 1.6023504219691993, -1.0466324323349272, -1.4564477531799269, 2.3181236130941922, -1.1842682286469559, 1.5310866403364596, 0.98504186678053463, 1.0354424908169668, -0.32645275715261052, 0.20402308322789742, 0.41620367641641332, -0.87241084377088629, 1.4581667105060365, -1.9894623867853563, -0.44294347996653693, -0.96629662997972565, -0.13219871079868031, 0.77799705805933461, -0.78506510312999911, 0.5487719496881196, -1.550038056932566, 1.6497017143251727, -0.31477684596906896, 1.0247674831428848, 0.10267287276737781, 0.022490170078264461, 0.46445641310118413, 0.13806496171041555, 0.79037998664767761, 1.8922751719455291, -1.353008632531143, -1.6100863211030427, 1.0068299011557562, -1.6982665396332124, 1.6064959743359282, 1.1298834272227714, 1.2548691509727765, 1.1889876839759923, -0.14797583234975958, 0.25203174214242036, -0.2338553682350345, 1.2491710973084449, 2.9015220186931456, 0.56087430085620094, -0.17594474119045567, 0.47050554667304373, -2.0571227176764717, 0.045486027771305601, 1.2116202475357767, 0.27937508653789722, 0.48305573611500097, 1.1341535368227644, 0.97606984643597561],
    },
    SwRef {
        name: "uniform_n8_s201",
        kind: "uniform",
        expected_w: 0.90221154817341298,
        expected_p: 0.30245355248162464,
        data: &[0.98146748975830356, 0.073266655734708364, -0.023317302628337977, 0.18394878682424665, 0.36814685298860339, 0.039408362854296053, -0.69722424653351966, 0.085590979851971394],
    },
    SwRef {
        name: "uniform_n20_s202",
        kind: "uniform",
        expected_w: 0.95894129812408568,
        expected_p: 0.52292202787302444,
        data: &[-0.30742500015251539, -0.11268818405118197, 0.63151026715290204, 0.37498336156697265, -0.39914801757800888, -0.11971652446333869, 0.12702163648654685, 0.67347762847527526, -0.57520238918451061, 0.82900553984721803, -0.3691910934379965, 0.55651361880091854, 0.049483891881653141, -0.30216657421076376, 0.1146071229241461, -0.028267333073833889, -0.69505709844145103, -0.10503491892613148, 0.85568602592471144, 0.31635815791182531],
    },
    SwRef {
        name: "uniform_n50_s203",
        kind: "uniform",
        expected_w: 0.9319892562065657,
        expected_p: 0.0065769755869358633,
        data: &[0.56188609884953222, -0.31138394263427882, -0.82511025528514748, -0.53804152112304848, -0.36598601023655686, 0.72425368523596734, 0.23649887826303484, -0.12130482592984992, 0.42903102428384932, 0.76841058154582376, -0.62507622365592574, -0.76019362758003473, 0.47500308991009699, 0.69532863643988496, -0.59019698279392752, 0.9196877200474296, -0.024230005087222173, -0.94743992558464218, 0.44124209003180059, 0.37112374247631208, 0.48767020289926255, -0.61522342481671588, 0.43524961182957567, 0.48968051531834678, -0.44987259281296144, -0.18419892348008626, -0.52156754630394797, 0.96495472210983491, -0.98069584758445272, -0.010375109233251578, 0.60415640262882908, 0.8508116230952667, 0.01544608358095223, 0.13713184975698289, 0.37354344376610449, -0.21375363396207536, -0.56075692836757018, 0.49944283237833176, -0.44766681449836798, 0.92030341938615967, 0.90530976954334297, -0.896023597721465, 0.41734461529941291, 0.22291663430964936, 0.78718476922729552, 0.81606762041409908, 0.85117692418510749, 0.53491854679105488, 0.39666588695300997, 0.027287341845219748],
    },
    SwRef {
        name: "uniform_n120_s204",
        kind: "uniform",
        expected_w: 0.95840578316115643,
        expected_p: 0.00094412467160370631,
        data: &[0.072870185478365546, 0.62395021593953159, 0.23719076216817059, -0.55062493840051174, -0.97931137985037409, -0.59660480846331199, -0.8823142846333325, -0.45572856327870404, 0.94192068174704291, 0.52707537014271266, -0.14375753287491655, -0.89537257075222398, -0.78203643357227648, -0.58903226952705046, -0.59522573651136601, -0.58089515808062431, 0.07000171566570712, -0.64787797295982141, 0.090786847475426979, -0.66771562799926376, -0.024865490430596271, 0.15993467399886674, 0.34941556989184397, 0.46399305550449155, -0.15631540451696102, 0.6571679173028635, -0.14505225781614439, 0.36031575638047575, -0.044069377669389453, 0.48431310362122271, -0.4009244169403845, 0.95379767282079997, 0.044856755526632597, -0.15455024018661767, 0.98864343616149486, 0.26469159506714846, 0.22210073386571461, 0.14844786079047889, 0.83789691494578333, -0.75294653474639839, -0.67223670348653886, 0.22120498845755088, 0.51668157105803081, 0.28022507164641519, -0.38827561897412521, 0.88138927770222231, 0.4109590821377056, 0.49721080363022785, -0.12707004835952018, 0.18498533847433207, -0.49762405955917965, 0.63656570465872009, -0.53246882808715057, -0.6208758413263995, -0.28487674156399345, 0.15934580471474669, 0.21155723635626766, -0.13760639058577095, -0.64029125194870384, -0.29705105170686696, 0.68319749725300927, -0.97695971146664484, 0.79169328456365018, 0.80066144710730081, -0.22005453465004288, -0.23418054839801172, -0.9269924869517876, -0.57430518684830223, 0.27178391935998114, -0.84868314754782448, 0.91828894711094211, 0.68538480103390076, 0.37450652887631164, -0.16876145614798066, 0.89090521137500378, 0.28924472302300619, 0.91373601389261361, 0.17470964308270376, 0.99378605816374166, -0.38872824258373306, -0.74840578889757237, -0.16174838446825301, -0.33480539015039046, -0.21963962663766878, 0.3617078390551538, -0.16455916959171968, 0.67434936623348496, -0.85339565130014172, 0.073048858822350571, 0.16368673625791819, -0.51492392114065311, -0.29764252274454361, -0.71787659874671128, -0.21808510978619333, 0.41355614631708804, 0.39687373546272142, 0.41261037764029762, 0.46458303959275304, -0.57663408020719142, 0.31050799921518735, -0.53672161355564185, 0.78640404729487434, -0.79869051354476173, -0.036528613346676675, 0.38524902471183209, 0.50789387720125712, -0.91673755438839333, 0.099997472546578647, -0.69396039151945477, -0.79057377784656757, 0.0090340155015620205, 0.89372521132105143, -0.94735901575096948, 0.83902995223376209, 0.60711512852995697, 0.61335550812889328, -0.51650525468837816, -0.56738116684235407, 0.76981129441852714, -0.27554541588783676],
    },
    SwRef {
        name: "uniform_n500_s205",
        kind: "uniform",
        expected_w: 0.94372080895895039,
        expected_p: 7.7840616761846561e-13,
        data: &[0.81637123019392743, -0.54387941186764066, 0.64616975254232911, -0.61921860283316921, -0.16238758849578727, -0.7295638679972849, -0.074819715091992256, -0.81166475285346684, -0.230012514065709, 0.93501540724984, 0.79596294841389481, 0.21539234952969766, -0.099273286696738738, 0.71290392588716722, 0.79960305239484231, 0.88055532149676252, -0.1205573175759671, -0.50297144950003947, 0.28739216244236232, 0.71400458762412966, -0.64138859957074823, -0.23747412280621361, -0.041390925880740337, -0.39928285421163201, 0.50322825362882528, 0.99270250616035405, -0.067342584892658097, 0.8907083839826615, -0.24361665621672857, -0.96317758349851745, -0.34423926004482275, -0.92765164874166617, 0.48752729698897568, 0.8453305917197016, 0.41803021260057993, 0.37628585634899947, -0.11264124459163338, 0.29006370940671133, -0.82117999160804978, -0.045720186432130605, 0.9566654568880697, -0.8678599293295608, -0.87228028826029713, 0.79603468171763958, -0.32392751223056715, -0.96928712781166837, 0.24373696758574481, 0.95118606551792273, -0.38784633696311666, 0.02208631795371474, 0.94398683864069666, 0.038500024532245325, -0.70738742934678522, -0.28666871525806026, -0.31535014817560492, 0.20752951262085073, 0.56494060566081661, -0.50172545870083463, 0.95373790366851918, 0.64942718466725458, -0.35002954562870592, -0.97062351204067521, 0.64897734736990831, -0.59598389459527557, 0.77921036784881492, 0.077745938224649702, -0.48241119838788382, 0.82402770530349834, -0.56904299273294234, 0.92746295840540416, -0.33585648942760815, 0.10754698577058597, -0.95600566084101346, -0.23892327650754397, 0.025115332140127844, 0.2636004162404666, 0.67976185022634406, -0.074062068843523621, -0.082492064814381871, 0.90866182071411661, 0.39246858066596069, 0.33329960158757732, -0.42768666602572369, 0.2646811344598452, 0.67247145946624931, 0.049185277235787916, -0.55375298738085865, -0.82760594935357856, -0.89971942275502292, 0.59597340766526385, -0.69241512401912941, 0.35687754982718611, -0.53139806591885796, 0.30344991882772665, -0.46973882916901655, -0.96578877758598902, -0.95683742049187082, -0.79249953373346349, -0.94782693341149149, 0.45540328496951066, -0.61140724380815903, 0.30073569198286099, 0.5409542360528532, -0.71309208877302299, -0.77189828096468172, 0.51135396727814952, 0.00026505454132519368, -0.83299088584221237, -0.44800335442370498, -0.42703556945163901, 0.15728835791391904, 0.70409483246488391, -0.22834809449017746, -0.39900799543287557, -0.80076281315615461, -0.82803355049335092, 0.37676358214000771, -0.68886405259905903, -0.65828947518626468, -0.32924116031724804, 0.32880992889463379, -0.89909301299853728, -0.81349615658719876, 0.08599449000590087, 0.57686149561742095, 0.11863009012617831, 0.87149940472096565, 0.70194413788510812, -0.53495315575129188, -0.76257776710168024, 0.071121162727935783, 0.023855981314208963, -0.34507870363369708, -0.85984574038205586, -0.7557284188249207, 0.38456276626465158, 0.63234832938904173, 0.79359072283201582, -0.79841768109082256, 0.50729223194317696, -0.30112493721051226, -0.30727460528699746, 0.59305899073503898, 0.91124234878393184, 0.57406456168652298, 0.18401006051667812, -0.26888443126879635, -0.82459873827489849, -0.47486406944062609, 0.88585328885521153, -0.7489178940951613, -0.50370289821799896, -0.39348005322371393, -0.26965163066769438, -0.84833241942412374, -0.92153755085764866, -0.63754864708471648, -0.86595054014620931, -0.42501016385421453, 0.55498210582002283, -0.20166241408876839, -0.68783350416670763, -0.40791470701335131, 0.90529034221977622, -0.0097457350887339977, -0.41492067097986118, -0.85018467644609408, -0.22707764113447459, -0.04478208096494618, -0.43587690283447778, 0.20116512099128547, 0.46618473452814335, -0.60846993113453807, 0.10012846566454403, -0.76865282461318096, 0.05219400304318178, -0.017046937574962895, -0.66505112157522706, -0.89559966289961412, -0.041189102224391094, 0.93677005957965775, -0.90402472914466614, 0.4372683771872572, -0.55755645002244925, -0.58794027367248969, -0.84404468163482371, -0.29089112209110035, -0.36555450215528973, 0.18910517282688755, 0.7231820019991102, 0.11102147794699535, 0.83043979512172683, -0.47364620039870231, 0.66702432017540203, 0.096530776462280699, 0.7838649459372371, -0.80712950727477883, -0.32973517516589923, -0.36337709381162431, -0.20705149770319453, 0.99725287469371682, -0.73704225287650771, 0.29115706014632048, -0.68703882180521103, -0.62714891943764428, -0.45279391173192529, 0.086718911658942854, -0.52359826098827345, -0.35711223466675102, -0.49148404242155297, -0.91345104131321397, 0.83577619631853284, -0.090537391594508465, 0.74278505081915247, -0.24505851346035179, 0.43172688936867498, 0.80799875190804693, 0.69916063253006766, -0.82505629490850274, -0.26637236561261135, -0.83438089985278263, -0.63348247381473066, 0.48375369828831527, 0.7136560606100455, -0.1425966141656958, 0.27351808205163919, 0.39811685868524416, 0.97522665457922852, -0.70741416053400097, 0.9504579228481953, 0.43140851107117939, -0.75757721786439824, -0.60558000974319581, 0.054439464887048983, 0.64509481060702378, -0.4906664460993897, -0.32662323464361331, -0.36551629336444025, 0.4547446997993867, -0.25489459523392144, -0.42583203433866479, 0.49508372295906389, -0.9692070138010398, -0.20561976726919484, 0.98576979097022721, 0.59349442715223133, -0.075035180041211014, 0.36872700483730769, -0.093949298626303968, -0.3271220715422205, 0.2582227971188551, -0.4423794232233822, -0.43587065104058587, -0.56795232385637484, 0.51975479516003853, 0.097125726210523622, 0.19270963843413869, -0.1596030493920455, -0.5815086920450665, -0.34276151020784784, 0.5070541743792798, 0.12064230655003172, -0.76989357875950382, -0.32963026364419878, -0.9333777930009346, 0.06954075385898606, -0.57621352849383856, 0.5455108817732861, 0.26754277216369315, -0.22071052685724712, -0.13904523894468013, -0.4742156886772313, 0.60113928637972669, 0.95297341729392171, -0.61449255032874039, 0.34768979535174172, -0.34917668505187582, -0.29814315777091838, 0.28624972194359688, -0.73074982949609213, 0.58567422474709074, -0.63646960674723618, -0.42742196298811352, -0.30183555250916561, -0.6301947510230328, 0.33221746698491605, -0.46788669684521755, 0.73628937766352776, -0.51168716267330105, -0.6249596101825019, 0.65752649464429469, 0.060291142280229248, 0.48930785866391013, 0.11453378455795926, -0.62891876145740877, -0.81830570242965761, -0.27753985888396882, -0.14262779946911985, -0.35766936222626344, 0.69648199232674735, -0.5745320512888481, 0.26207059266187205, 0.93208803425106357, 0.49126745984102849, 0.25055127915526265, 0.61956785099706124, 0.37379331516686398, -0.80981120965632747, 0.7157316668132101, 0.98889236832390326, 0.029890242479651885, -0.5414861756639795, 0.83824464903070339, -0.92500833286014195, -0.20234275630882093, 0.41596148315232107, -0.27715538920122484, -0.79200139168391859, -0.63756700542254485, 0.29345306763091306, -0.016258890736494447, -0.083769464795893978, 0.83690717285445571, 0.67525817722562187, 0.089182843777225296, -0.35346367184761118, 0.76782630588516154, 0.50745391688507557, 0.10136309978465308, 0.92449366318376924, 0.32308230513468783, -0.5566546793865077, 0.88820010137751937, 0.6731842406138413, 0.84983507220645804, -0.45177179620416252, -0.80322638724985995, 0.34474282463538208, 0.55672662808923867, -0.1818792820655577, 0.60733033269271375, -0.81804660337205859, 0.90352114056806387, -0.53929789181768539, -0.49526619754628687, 0.55739046796545266, 0.94191402953731584, 0.35456609488837243, -0.51516784806960358, 0.54347069657905434, 0.92458558731488139, 0.085568951696425977, -0.80879416848740693, -0.24450489472585812, -0.63665937952299978, 0.54784662009323348, 0.37672644348988382, -0.10362901393394419, 0.094322785779298313, 0.37955219007970542, -0.67229527821146551, -0.79241640090072329, -0.54043279193503668, -0.11489566410745811, 0.66445957906700115, -0.93335513794380476, 0.96775521326152902, -0.99741357610767944, 0.48132279139204415, -0.60769543898625611, 0.037409205722482852, 0.83185423166371986, -0.52857067190968099, -0.80264881513576491, -0.21301614651638379, 0.79099423513153155, -0.63974462813474786, -0.15457000996234616, -0.18439008981168459, -0.71769040287142305, -0.38657140321996919, -0.59103188354458935, -0.33971139617400037, -0.78573603818975446, -0.59610547894780375, -0.37764750534260871, -0.52078630154490657, -0.88636268719127242, 0.41671271478605121, 0.81329463934532953, 0.64558180661434705, 0.53254773395871968, 0.72028510746069463, -0.64463088454712025, 0.025425522217164431, -0.029232072575343881, 0.80896574649993802, -0.78106584323092698, 0.24870859773062359, 0.70448449557319925, 0.85726098157489083, 0.060741250515278011, 0.88479610514285389, -0.15482698534816297, -0.74240932086268496, 0.23380070227688621, 0.61736194357933627, 0.60287236913102227, 0.46152346641140385, -0.50027502980727179, 0.047085137201728244, -0.45266979441421129, -0.15649378015476123, -0.41316120878115759, -0.95115636404082116, 0.55670387093494345, -0.18813076209350266, 0.12572410312231153, 0.72709850472042303, -0.65464347083063279, -0.41450907279014881, 0.1550555031741685, 0.60241275719110443, 0.040184665974281497, -0.69995864316471756, -0.70810400413166463, -0.58176553176809453, -0.24359521065267531, 0.16629625509680213, 0.81268716178608691, -0.27601959585845837, 0.63162329534425821, -0.46471356925692819, 0.41815344074767347, 0.73331731185998472, -0.97442810265092139, -0.76450722114880865, -0.57092006633466519, 0.047767939644036694, -0.032436776134248113, -0.524406479472874, 0.70763452251691383, -0.006482626994148033, 0.4130487028465315, 0.9315044218740629, 0.10759866038657995, 0.29625442470490859, 0.42835867824729812, 0.70179627197937688, -0.58743650018761828, 0.39544953597627686, 0.61001535396677986, -0.84032624806810885, 0.25198766666751204, -0.99828430211843777, 0.082280761579381023, -0.6953715205395723, 0.72582426551483747, 0.49417544788464762, -0.099822792634642443, -0.40092354492592408, -0.6553856933970128, -0.73067719976140699, 0.98403024845591625, -0.73317855828376732, -0.6906476079343884, 0.1765517547740294, 0.84011402889112263, -0.78698114847911804, -0.66913707415179124, -0.78988376769787982, -0.41003718627283203, -0.033693803295175018, 0.0094770555090244457, -0.19678509833916902, 0.92936116859367091, -0.93108673222183813, -0.5387592658276692, 0.93243398279211775, -0.53590335576874115, -0.55161085349108729, 0.076426677539781274, 0.40372489989385807, 0.97450696863406083, 0.22187521977454039, -0.50848520055350033, -0.027591480654999501, -0.95379724185641046, 0.91811671779005599, -0.64236595565108612, 0.98665039689560174, 0.94308322081004303, -0.62116340979884588, -0.7958366845987086, -0.5190145957193999, -0.027699931083120077, -0.034374674342029232, -0.58505308746007367, 0.21950844820909898, -0.069386898250383133],
    },
    SwRef {
        name: "cauchy_n10_s308",
        kind: "cauchy",
        expected_w: 0.64098769787012588,
        expected_p: 0.00017103821619430718,
        data: &[4.5115907785293103, -36.910161799001649, -0.0015215962708893852, -0.27753547090605857, -0.3272990787647489, 2.3252448128544954, 1.3607226831011605, -27.193040515063714, -0.12287329327876734, -0.75714115139329152],
    },
    SwRef {
        name: "cauchy_n30_s302",
        kind: "cauchy",
        expected_w: 0.3278227131309559,
        expected_p: 1.2191626081214336e-10,
        data: &[0.039968819778033279, 12.12128607367451, -0.25237226002021507, 2.3345300118729435, 1.5433164026145929, -0.22670813967366654, -11.130455619039951, -1.1941299857528418, -3.0514147263039217, -0.40639238451905779, -1.5378113454228073, 1.658316774773406, -2.0508748466613493, -1.016212238608512, 0.29763417066928616, -0.057241449335361697, 0.11405464223170561, 0.17191167344540162, -0.12201629268709198, 88.672799398419613, 0.68849218693929681, -0.58228651016781874, 1.438764238339004, 0.068851245189097271, 1.6924178010285365, -5.786909782966049, 0.52175730247511742, 0.69309092445930698, 0.77492844536514871, -1.2703911996356032],
    },
    SwRef {
        name: "cauchy_n100_s303",
        kind: "cauchy",
        expected_w: 0.46163599757382423,
        expected_p: 1.9264572608233365e-17,
        data: &[1.7207912106911396, -3.7086852451703263, -0.41690324696498732, 1.0381750232651579, -3.2792131814723473, -1.0913707629736851, -1.0599693229284668, -2.4672321020875616, -4.8579658914318209, -11.467228898026741, 0.0058791717595944671, 55.378484571729146, -3.2103813881836638, 0.6974745535651935, -0.661062351742571, -0.44767399078641151, -1.113216154936205, -2.4987023754031394, 0.28942227170835599, 1.8267696742711832, 0.1327890194383817, 8.1130229401680154, 3.7665433121582752, -13.153454337925375, 1.2025774093592594, 0.93351887177933157, -0.51085717725311153, 1.3842493624628545, -6.6008244582390088, -1.8918292427598524, -1.1884019343915164, 0.53416974817684315, -3.1154421425459855, -0.011355430304695997, 0.28703240750598213, -0.18827346870716041, 5.5632207552942701, -0.8064659762348878, 1.0893632935180981, -5.3476858293511507, 1.9801891510160672, -0.14008101309251444, -0.90672033261022333, -0.065628984852756492, 3.9763457761621939, -0.52865912485654276, 0.43919625974464965, 0.44880925714345177, -1.3807977105277369, -1.2520135167173618, -1.6332267025847833, -1.3253090437706176, -0.95022966096172778, -4.3373839795146223, 0.68990441149175696, -0.65151089409730922, -1.0246823874925524, 0.038125401350835177, -0.097677139901061055, 0.37114403059980228, -0.11502292580455213, -0.0062712431532817416, -0.52833180167509886, 0.57698310470914926, -0.57503811607557898, -5.6468801751002156, 8.7788491604571259, 0.15348200777329099, -1.4281623745774652, -20.327784094939513, -1.8605850551082057, -0.39802677928636043, -0.1235712503855835, -1.7963978408157639, -0.53193750669052009, 0.48930359525505912, 7.9031091595754992, -0.27006309523583855, -2.0016364404097189, -0.75209382231814526, 0.9889273187042128, 1.4893908969119913, -0.1757700860460957, 2.5871001540737852, 0.93362296143631651, -1.085438303237908, 0.37609134245222525, 1.106400571438261, -0.16433492927888613, -0.52609679563760403, 3.4496007926145826, 0.59032034937194655, -0.18982178714445935, -0.20375282435323805, 0.93075070840883567, -2.0305218209373148, 1.2060041696040291, 0.41067429806050537, 0.65254426020051726, 0.37777175061004908],
    },
    SwRef {
        name: "cauchy_n200_s304",
        kind: "cauchy",
        expected_w: 0.62788225964401356,
        expected_p: 1.2129531947012407e-20,
        data: &[3.3545395566902405, -2.710035599850412, 0.81322999210993929, -4.4624845308098902, 3.1911053869396704, -1.5774330960709564, 1.5024636946880026, 5.0903857649940738, 6.2505413487773254, 4.7189878774254508, 0.39201153646733866, -0.627382909812357, -0.49864851351361583, -0.76423510016691543, -2.2639871912903113, -3.0114848450046088, -0.50044534286196685, -0.071317548384371751, 0.68514553214858187, 0.062180192296352445, -1.1545428948459457, 0.74987453821205297, 4.1207576523334346, 0.13247911973859963, 3.8652464217978952, 0.32165490081150216, 0.72109321660298342, -0.36222069293461562, 0.6468742192951481, 0.24309994356177597, -0.31164602317551682, -0.40442139882486983, -39.542861327103303, -1.018575679889191, 6.4242812391002309, 2.9667259337920484, 0.39744211630738058, 0.75099493487855151, -1.0201216241664519, -0.94669588321399056, -8.0380059253765328, 1.5545589644831912, -0.7621016252893752, 0.59035884322483401, 1.1129391372166162, 28.804803879260518, 0.66179619308366, 7.8149304200581327, 1.332570354238283, -2.2612479146889171, -6.0252076665462386, 1.897120827609089, 4.2113715258414981, 2.5565625700700769, -2.8865422120035302, -0.96616915272454251, 2.2191410371119309, 1.2978413257860053, 7.4407855693866551, 18.704937677381778, -3.3332849354465672, -0.3145778658446462, 0.78330904345286334, -2.3766233353913293, 0.78004295889442232, 1.5282504197836544, 0.45371449847347262, -19.283320108887782, 1.2635617471230456, -0.72984348317057046, 4.5444819091949968, -0.38644818746934134, -0.82746043150322479, 0.50142731454615941, 0.93193606039841836, 12.019007452059565, 0.19550499613029679, 0.22679653167768538, 0.82348291247500438, 2.0981360324337741, 1.2245414098630483, -3.6162485513208429, -0.81702132887973578, 1.5579865255042515, -3.7247384046983578, 0.89130974625262482, -0.030704555012472177, 0.16277345580415437, 0.16633641085895282, 0.011171619671285507, 1.0416033639107813, -8.0580424733402189, -1.5209023987322656, 2.3211849902308108, 0.67943940521955903, -2.4953907988869655, -0.53528242156982808, -0.27299763747739636, -1.790175381556411, 1.5797661217237455, -0.41651389676369949, 0.14151793881043834, -1.925194386288517, 0.95849504135663399, -11.194012130724577, 0.13393332021030466, -1.1324614899545884, -3.4892560171835276, -2.4228904587061733, -0.13971412271218195, 0.80905476784380415, 0.90136549218318729, 2.7040808322648346, 0.21621418019034588, 1.2480924852098292, 1.1172481504772172, -3.0016496932302079, -0.1915940387536085, -0.22452800065701486, -0.75622182496344137, 0.8754415369051588, 1.1194107070712065, 1.0986489477099526, 1.5007555452030275, 0.74953331852666616, 1.3463947224914226, 2.8345793782917585, -2.1129344541540966, -0.2326763566662689, 7.38075777933705, -0.018663588028500579, 1.2245417481834016, 0.46839923210703516, -1.0644611328166005, 1.2311136110702667, -1.3485436280994128, -2.0420587859163821, 0.485856587210026, -0.84497582023425932, 0.29982620086505207, -0.88266675334368416, 0.35681677433279979, -0.039625190937200169, -1.0160821144067314, 3.097472928329247, 0.81627977078152469, 1.0804007822590962, 12.044640257185973, 0.2625095961039966, 0.49105661007639217, 1.2142292005101587, 1.768066566993961, 0.63234809599461717, 1.0967799753285516, 2.9509364849940667, -2.4334234481709034, 2.807653657499388, 0.11718590489207011, -0.0425677448088147, -0.18741112525306439, 0.10870412501118178, -1.2306332582959607, 0.13168626991929885, 0.63808085380371893, -3.1967034143191073, 1.7188968111970468, 0.33463469261331164, 6.0074172278955746, -0.57705241391738138, -0.66485412569753688, -0.070656020121110233, 1.3944970766771596, -1.1307287815241445, -0.64607897828929117, 0.86529737779504268, 0.14983190353820044, -0.14622889192071592, -0.42760938879443477, 5.666888353048229, 0.31144566272866536, 0.94748577047153504, 3.5722482387880796, 0.78543761692398095, 1.768589078641823, -19.672414570724353, 12.572871365464991, -0.13759543090578433, -3.0644353045051744, 0.54693579160421379, 0.81060319899173339, 0.49644534681261976, -1.275265299341992, -0.60148132612432204, 0.72878388794194904, -0.021698802619440561, 4.4599808041491276, -0.10828182823645716, -0.24418814438345451, -0.19040531117961246, 1.4091705044873051],
    },
    SwRef {
        name: "cauchy_n500_s305",
        kind: "cauchy",
        expected_w: 0.65646296990916919,
        expected_p: 1.7035336003045827e-30,
        data: &[-1.8881396434128672, 7.9529040476428365, -0.38254533995149365, -15.089343494274935, -5.8021574939252014, -0.13821719885049927, 1.4420305142803049, -0.57258643340587589, 0.83213946276624995, -0.17578944551385342, 4.6076845974036154, -0.48258389866183787, 0.018563489199118544, -4.946502835313666, -1.0010892067421542, -1.1236546771230642, -0.70581870742670072, 7.8744525644419632, 0.56221193863717878, -0.45590968423936107, 0.276065732326299, 0.92945183239297213, -1.9374248894393791, -3.3375045107191994, -0.54968938101062992, -0.47692803813381762, 7.0418392277223107, 1.0846195737439808, -1.0750298792426694, 0.57203106896918898, 0.49884042052022481, -0.064787451528464102, 8.3679976353042136, -0.019415739605515608, 0.053686797695201197, -10.628836592121568, -3.8089333281141036, 0.42332421403527537, -7.5466430929959349, -0.53457787791051281, -0.83515329051710452, -0.67043806278453488, 2.8180639345875984, 8.4827942586464751, -4.8756375040400854, 0.69078740188845122, 0.68390772431222147, -3.7899279536629158, -21.697267623044734, -0.71762425666525897, -0.96410641379321149, -1.552369611561573, 0.048081238499041959, -2.5476082329053638, 0.39565113268068219, -3.9913657938089662, 0.1815866365865571, -12.142630278230174, 0.086799706802911256, 0.26870491563445698, 0.12418787181905939, -6.4619255432333569, -0.13472442731207357, -7.262378510565564, -0.71036113217033736, 2.0027396584609369, 0.16609647174738557, -0.065150702826705917, 0.16536347312596791, 0.2154449015143742, 0.12939403137555061, -0.036292848185458637, -0.8043186453995087, -0.48334597639407983, -0.62197728049416379, -0.43604777331849864, 0.77568597697834529, -0.97055974648316934, 15.918342528948413, 1.332213554803904, 2.6880775336307532, -0.95969240330302841, 0.84035502818384189, 0.10813200046841313, 0.59813825297192591, 0.13723417805823709, -11.178129566707319, 0.29257945700875387, 1.6026540318489686, -0.68080826001678874, 2.2550660851374005, -1.2024798262211536, -4.4080477193055474, 1.2757099260115778, 2.8637744320562959, 0.6422329226773098, 0.53279334353124375, -0.34263179938150401, 3.2802219801094923, -0.36500817714340428, 0.53773823452563296, -1.8338097237692856, 1.0741909367914038, 4.3443951597358108, -0.15317818258063085, -0.13819551131433544, -2.6023072043740458, 3.6997711190616558, -2.5571037113856971, -1.8336577413306159, -10.586667973674674, -0.010137564449614809, 2.0721957126376096, 2.4318316104635413, 0.33201209789598191, 0.54453725724346458, 8.2375057868085051, -0.098791748718960848, 0.37198897612528392, 0.052751187255987333, 2.343709640667802, 2.5272623654721711, 5.2382025233580629, -1.1626931027428564, -0.45565174219531612, 13.602356886834912, 0.49170751022638221, -0.10751679953357807, -10.806105496906111, 0.33789663158624939, -0.40367756505918295, 0.30683909338016707, 0.32365065348416905, 0.095930252160899759, -0.56028059764811466, -0.87515982517196911, -1.0387891543456527, 0.65898333113901775, 0.30480834849376576, 0.11988377848915703, -1.0101827704611834, -1.0524540451024038, -1.4454282548461155, 4.2554978830407988, -0.3151168953216244, -0.70721710227169143, 1.3219378752338569, 0.78335030920674631, -2.1254672547110123, -1.8027504205935556, -0.96896179541301497, 1.5847868922507435, 2.4705059510026053, 0.88242330817737524, -1.664942527386398, 0.87340941677510764, 0.13765248267156638, -22.385135400397083, -0.64221918621874852, 0.87755516256396449, 2.2912369742015688, 0.15645184219644645, -1.0515484504155634, 1.4978318117026184, 0.39766755520230707, 2.4024732930541997, -6.1160688466999105, 0.14210013578954164, 0.44703584664030205, -0.059492508210033261, 4.4701565209722505, 0.51205630280566872, 0.11357796652489664, -33.620068522878356, 0.24081547323686145, 0.80191249021008304, -0.10100113327241546, -0.098311347840965749, -1.0380872862257888, -0.42641176022539923, 1.5748058321360692, -0.45195071481926458, -0.78383080329886234, -11.237130225844219, -0.84917438334467354, -1.6013738521280674, 0.1445507338981348, 13.432196518133233, -2.1307852847547548, -0.36565778086136447, -2.1539750487363283, -1.4057558257380189, 0.30310550811740716, -0.5958737226503189, 0.76524111829118668, -0.33278064146143865, 10.255146714009136, -1.2650954799285534, -1.7743807106431555, 32.87492642249866, -0.4248821202655052, -1.029424926137837, -0.64935314191478233, 0.66700480023092601, -0.63586622806569926, 0.49019069069342824, 0.65503969513560112, 1.7530324937602932, -0.60064872657951918, -0.52589934336908728, -3.7139422179509802, 1.8844398482198539, -0.98630198097042254, -0.014590204315218236, -0.24344538479431621, 0.89544835434821957, 0.20892145236055501, 1.2350153346278585, -0.19421854913025915, -0.10358556346033435, 0.05963506356159843, -0.6318755688529315, 0.090348206479926516, -5.9617218865158943, 1.9265842881020001, 0.72595687265151598, -1.8744491557867249, -1.5292250066391901, 5.0607013253211903, -1.7074421085362728, 1.5596640211568455, -2.9070108949324327, -2.6439886138173092, -0.26691415574492655, -2.3115969800935456, -0.1921492333664466, -2.9850908777320102, -3.5587023145910872, 0.54532490134288258, 0.32956277815965657, 0.39007171799693047, -0.88869807975731885, 1.1146975554352099, 0.010589876184479907, -0.34794571653273471, -0.037970287675805306, 0.17771980870674295, -1.3248773332192705, -0.57232926591668554, -0.054899486077614204, -0.72486542405765875, 0.80725064509800981, 0.68463728766157383, -0.32070505639560204, 1.6832233289819418, 0.90508901629256466, 1.2319672839470495, -1.2136386664920988, 1.0127099415495608, -1.1115326524663767, -0.18116578973668809, 0.79207853895500802, 0.36110465657740615, -1.4942415427859499, -0.31932989492503544, 20.752851208734832, -0.34816199400206665, -0.13205134626410434, 0.33260065096019392, -0.59330787447042099, -0.37972852768853665, 2.5257185978833414, -1.7834468032285347, -6.738477988332912, -0.16136932064534451, 1.8466541670630601, 0.55908333261422383, 6.8577627465591657, 1.9221151963718726, -0.81254503558525482, 0.011841889003924458, 0.71371901125446113, -3.7614099332156696, -6.4392096514191923, 0.32352294201077281, 0.71521256028887015, 31.721189809944811, 0.13744183435352991, -0.46813720923467611, 1.9123312174640301, 1.3094092198637184, -5.5414281631184217, -6.2519970746567113, -7.5043195115806931, -2.4354853853144727, -0.32927871925257574, -0.90982969793187585, 7.1899203550250821, 12.480774070658915, -0.30550440888662866, -2.7942990696319967, 1.9447598700685327, -5.7031162271573557, 0.088289638454097957, 1.6487258673616221, 1.4147390333861811, -0.23626875369588107, 27.868807045691874, 0.65045315915168045, -1.7482293989287805, -4.3478603814514472, 2.2649919688946172, -5.856342011082317, 5.5092278852739014, -0.33078515034615863, -1.6593250668122757, -3.0156157831052486, -7.8973011821355286, 2.3228307327206745, 1.2165176060508514, -5.1325078892075382, -12.017650567763349, -0.32169487415168296, -0.99307956107107687, -3.5264727005086529, 4.3363282531501328, 4.2463111340571134, 0.17745164545484296, 0.60186391713353016, -0.066137493572585929, 0.019918284558234262, -3.7659486751137754, -0.50019262800512743, 0.67299926092251505, 7.6470664672291448, 0.61687886876447739, 0.48693228377292441, 1.774170581687232, -0.66564682646391182, 0.72252231144512646, -0.70659825091286932, 1.0673975970676046, -5.4043332153661536, 12.280901314414722, -5.3889323495402808, 0.65097153100577831, -0.1930423396772315, 0.33403973941808252, 4.5100506474255599, 0.014281393815115808, 2.3819653234520874, -4.3414206685785572, 0.55018586196140717, 1.7113917702427337, -2.2705298497784949, -0.90377578875897424, 2.4854503994985264, 1.2855525978838518, -2.0355705317474317, -3.1884647079605597, 0.10357845208075803, 0.74227330012249315, 2.4528768113543555, 1.5285103022771913, 40.688526285468406, 0.39560872880032533, -2.7488510928944851, 1.473185161065875, 1.1463875589865575, 0.84649973831335046, -2.126648032160344, 0.14170945972831223, 0.12638526732445857, -7.1866694767504384, 2.0686985632420818, -1.2949990445634441, 1.4361403699074744, -16.587855991675347, -1.3915498178872188, 0.63677767605230129, 11.564909212024698, 0.4054315657514157, 0.2922273780462426, -3.3672714397662307, 0.32931392273784332, -2.8832495749658569, -0.69169117608844122, -2.184564793123446, -0.79792490089789814, 0.28134609650216252, -0.48354803584159206, -0.49442986935375943, -2.0774264891707297, 3.1689200673190583, -6.4037927486572288, -2.7697513950321859, 21.763721574492248, 1.2722780851758655, -35.143331456395032, 3.0641229820220932, 0.60884208774786852, 0.24400679172785295, 2.3190142344170841, -0.90983300404904888, 6.850724968018735, 1.1141213369817045, 2.0697892383847063, -1.6154165130254596, -8.0215322664486326, 2.0642487482575462, 0.19343943459489604, 1.8613148016795287, -0.47783651786819248, 0.30996805390345156, -4.6522614713887362, -0.23890233336650141, 0.041731639681575623, -0.54115739149566477, 0.016110198448666145, -0.089653631951764262, 1.2236636474805311, 0.71090807668057565, 0.98297437659656806, -4.6286584478996087, 0.42393261258852138, 0.3170245408046215, -0.49748984358126525, 0.24255023485200319, 8.3091379492840858, 0.483492333740832, 0.1578008914246101, -13.508780578444266, -0.29289784508189831, -2.3946709478076498, 1.5211004289788403, 20.715361496570711, 1.7963714239740969, 5.0862419861679919, -5.3527124717780366, -1.8410111628889816, 0.49642563385381222, -0.51255193421492007, -6.5976129360562821, 1.4095566139501241, -9.9246826202857061, -36.346475748808679, -0.040845904885564388, -0.1138883576362978, -7.0481929884215146, -1.0944960333703768, 0.9108204020828623, 0.45693651440741112, 0.98826309806353207, -0.26953424974298268, -1.2767542490581747, 2.051859805918856, 39.663598592677694, 0.86445090101530175, 0.91987832339621467, -1.4012144677804919, 0.91830154840822309, 0.69092231966853057, 3.183899087401675, -0.09725492104451558, 13.854823104199319, -1.3682844018459832, 2.2950961356404198, -1.4555597966754568, 5.3200560082871906, 0.3880502775273863, 0.86059046983705867, 0.73944846156293564, 0.91794782322742319, -0.030411271921840524, 0.71525623928844195, 0.7524263126218631, -2.4324190630212112, 7.5573953492798109, 0.6314524874676567, 1.0057627471618515, 11.109155179235756, 0.048643050662406623, -1.3495782635068119, 2.1279811998281795, -0.45517475761823473, 2.8208977800603834, 0.15329215855025755, -2.8625490158976339, 14.719022203725523, 2.2532056485092653, -0.63465101880700392, 0.47299803319229938, -0.47434230145621353, -0.29521171755954762, 0.70957487614091985, -0.11098429868644454, -0.43030215455826187, 20.349513694009794, -0.88209657421263132, -0.89178331190539417],
    },
    SwRef {
        name: "normal_n7_s108",
        kind: "normal",
        expected_w: 0.97966891929888944,
        expected_p: 0.95791526843229491,
        data: &[2.924817391145659, 0.051369710116822308, 2.0133432009333934, -1.1872109397651394, 0.67903858978987719, 1.091599154672567, -1.9092896950391747],
    },
    SwRef {
        name: "uniform_n300_s206",
        kind: "uniform",
        expected_w: 0.95694869877042699,
        expected_p: 9.8537216834854817e-08,
        data: &[0.72401881801692136, -0.22312574754526726, 0.99415880077927365, -0.35629499515319818, 0.78284360925521068, -0.78614978926482748, 0.69610656898187662, 0.72095770579213014, 0.25485146230106381, 0.73888066961026855, 0.57761952481769918, 0.90496701964951609, 0.7841055115562332, -0.83275765471552066, 0.65849593347746227, 0.24851255143589168, 0.63241264523177709, 0.12330504896100125, -0.16691372891432632, -0.66962211439030894, 0.16789833061432646, 0.21090951365126043, -0.47776577801806397, -0.43378153472694669, -0.14159940683422212, 0.47617821896399581, 0.82295289256325499, -0.11542739307791638, 0.37527492473822432, -0.0049833768400613376, 0.36987574969122794, 0.74377940136624643, -0.33219628853325056, -0.79564329938756484, -0.025890538507148397, -0.59020932810250759, -0.4401132471844571, 0.38919567206473249, 0.73734375016888243, -0.50215805284495652, -0.63325140702843918, 0.41928862251235288, 0.033441672417351853, -0.43200137213023604, 0.82026629976865428, 0.028163668730490254, 0.51491991188170405, 0.11396683257363804, 0.54572707538749543, 0.63415570879504868, -0.90455406916846615, 0.11001157088962676, 0.0077017529291645292, 0.50983530602742433, 0.050950825076599093, 0.12780667922647893, 0.27372991822520931, 0.91295592629743494, -0.40186225199023418, 0.94916633488739843, 0.94129669013506878, -0.37301524197999791, -0.53719050420667203, 0.97403548775014892, 0.91932222562030286, -0.62476482384545107, 0.58702317254551906, -0.14829101196819439, -0.82750613652948246, -0.64870833777699244, -0.34767530002655112, -0.76100080615494847, 0.40597973905352269, -0.94624458644225218, -0.051406315304976191, 0.56011116329017963, -0.97910373250330673, -0.25224517402220692, 0.85670894410446996, 0.44949099491600553, 0.34950883461694882, -0.52722345331466958, 0.69543855042520297, 0.99974791286591458, -0.88805756788773205, 0.57800038340485727, 0.3924136356897423, -0.40368459063999529, 0.38714664930644593, 0.89433599848744527, -0.38727129319138176, -0.6450863952587409, -0.38173672247539803, -0.53469293765536086, -0.4245438065056959, 0.19023335891142579, -0.43541006366677371, 0.68700115002630113, -0.26268002820371383, -0.56687368198229837, 0.7136031272324066, -0.1720457291464057, -0.56394793371157159, -0.86781764113912607, 0.49254993016980508, -0.22368312153104131, -0.22004810519370488, -0.79989704831462549, 0.087872908162462515, -0.97357200938195154, -0.43903541444406891, -0.25504224006394094, -0.42448989619370825, -0.058439840495668527, 0.77842427232374711, 0.035327890651818628, -0.66075702537243597, 0.025344397370491212, -0.41794335550237682, -0.1352998754141248, 0.21828881249500554, -0.69822037292213168, -0.45435798157385365, -0.41836344860623176, 0.94470743543085978, 0.81614297367177846, -0.25639422015714852, -0.31763299938666578, -0.89153981133034876, -0.37717669276864307, -0.58409279354058707, -0.36806057232335321, -0.93966277850924462, 0.31220144861380184, 0.95047865977199941, 0.99869877590205958, -0.15263253708110969, 0.64136698020089189, -0.23409636522027033, -0.60264647983235631, -0.83441376139597634, 0.93469485875569136, -0.52548455222905477, -0.050170633684449184, 0.84981892419316485, -0.066513312046104556, 0.0082651143063037225, -0.14768526611382948, 0.92626403728946372, 0.49607552204590943, 0.1848098229089441, -0.65401795894208647, 0.8364327409141159, -0.75897048641088305, 0.82377470826903187, -0.49666540435013662, -0.41117197678915995, 0.94506157322027184, -0.083714296184181691, -0.31744216935478908, 0.75008468194059974, 0.58685077370102801, 0.032195767252954255, 0.41681527540214236, 0.47373437057446366, 0.54080270354018456, 0.11121219163694218, 0.35383670788404364, -0.009557755241986321, -0.7476716165898587, 0.20672813697089776, 0.50702471627163548, -0.60984643928215854, 0.22265998900497141, -0.37912026251121533, 0.33809696831032565, -0.60367319398699015, -0.036875997827150231, 0.11607426302640467, 0.58474996855909001, -0.32324443479540554, 0.70319859354501935, 0.45848942101429602, 0.61331992388723688, -0.95648021685276041, 0.81624670049060954, -0.74508404947863127, 0.85954430451987052, 0.11594404064976271, 0.29472480603356588, -0.35623102395091344, 0.18780344060782017, 0.24812812793484151, -0.92070989612337217, 0.27253874799118738, 0.89685573394349127, -0.58417761973646654, -0.25636074196417269, 0.50913582512030819, 0.33609876872645672, -0.37215001987288443, 0.11777613280380428, -0.38165398718731547, 0.69133899061871951, -0.17121847405331092, 0.46117284976938344, -0.28194960202033692, 0.40751126478871647, -0.16156462833232155, 0.05576650763136981, 0.0061303902757441353, -0.11049082889649386, -0.42165116042978856, -0.61867547592060901, -0.095528630852416585, -0.17408292560618133, 0.028811966719683779, -0.8165361450737072, -0.82209504695089275, 0.2384390874505975, -0.47250473818063909, 0.89569465944309989, 0.066374807393661195, -0.96830882342334812, -0.07612597990641734, -0.52245426380500803, -0.28071766520763464, 0.89597095292615037, 0.87639735062944668, 0.47525752534220578, -0.65514211687827006, -0.046585809147814849, -0.79317121255209067, 0.62396950164798382, -0.097836117500582631, -0.95463261398175669, -0.041489191666498559, 0.62437770852879493, 0.027770643699643882, 0.52741966412803643, 0.13883761668361361, 0.024156790664121575, -0.39135563301131082, -0.61619424761169017, 0.92240441349738278, -0.506147720297079, 0.22859834610687568, 0.085254959984116807, 0.68762714231185718, -0.86815102041550296, 0.32709359027298901, 0.78170016930536423, 0.48886863285314752, -0.55737899508222921, 0.37614182201165525, 0.78494367877996929, -0.60356962263690539, 0.6799796369737281, 0.71348914887613835, 0.85613764798053049, 0.50381863866663212, -0.20828789803965964, -0.6351468572797403, 0.0783642533111506, -0.24622457579956913, -0.85687067456631794, -0.12212602847919007, -0.54749619742423627, -0.25629680535886168, -0.60799164767523384, -0.76443761702865531, 0.63392412900027462, 0.75918092735152465, 0.90368191543127163, 0.3290290613102862, 0.11247612315104694, -0.79778269715771843, -0.41035311542947972, -0.56336097559625764, -0.31611692794044122, 0.87535622920805745, -0.61343928365352141, 0.84129426861404588, 0.29249409212139721, -0.29502272979503474, -0.84576506209391433, 0.11156713120572737, 0.36269950797447037, -0.87222269713134915, 0.14960504398663632, 0.58396751433244676, 0.82660985385586638, 0.39606933408993572, 0.98589308913246554, 0.19240831247582335, -0.0090992950880413037, -0.51494381471758155, 0.97717357343545208, 0.029397597891885008, 0.00027413407898446707],
    },
    SwRef {
        name: "cauchy_n60_s306",
        kind: "cauchy",
        expected_w: 0.67038205931884076,
        expected_p: 2.4833460286659361e-10,
        data: &[1.5987381226234207, 0.13074761240238883, -1.6350428395958245, 5.370621283343576, 1.2549721748266904, 1.359989592130084, -0.29536936632273603, -0.35940885509051129, 0.8928766190112164, 0.12114992214115641, 0.64189275842224647, -2.2938763590071702, -0.2152106076103297, 0.54890153166281008, 0.56304072507348024, 1.0509797670699108, -1.4615926441990514, 0.46904180114708871, -1.2232095235127312, -0.2932703407971381, 1.1915355066763598, 10.788764060960984, 1.1922140681760822, -0.35194254105917455, 5.81478068136422, -0.31523478766685481, 0.79061569327879433, -0.76956940960920539, -16.222594480934713, -9.1978493938627128, -0.027319749579999528, -23.352081408458051, 0.2296467021542426, 1.1458843918954218, 0.24111901684437106, 8.8348382909965402, -0.57052340949412372, -1.1862209237867065, -0.28718706401497091, 0.42837024393027562, 0.54720502503405033, -5.5173858525042689, 1.3670598351482, -29.61238952812425, -0.62765320559052451, -2.3217652465628689, 5.0852805054941523, -0.78432439051159697, 2.426312652686196, 1.7326322774380423, -0.3319501902007484, 0.8884808863793342, 4.4050787169176022, -1.1853182270436124, -1.035216847366984, 0.2876064079025839, -10.588267401992855, -4.3545553997629005, -2.068627352167403, 0.65049775213455341],
    },
];
